#include "metanil/report.hpp"

#include <sstream>

namespace metanil {

using nlohmann::json;

json witness_to_json(const Witness& w) {
  return json{{"a", w.a.images()},
              {"b", w.b.images()},
              {"a_cycles", format_cycles(w.a)},
              {"b_cycles", format_cycles(w.b)},
              {"order_a", w.order_a},
              {"order_b", w.order_b},
              {"order_ab", w.order_ab}};
}

json condition_to_json(const ConditionReport& r, bool include_timing) {
  return json{{"k", r.k},
              {"holds", r.holds},
              {"witness", r.witness ? witness_to_json(*r.witness) : json(nullptr)},
              {"pairs_checked", r.pairs_checked},
              {"x_size", r.x_size},
              {"elapsed_ms", include_timing ? r.elapsed.count() : 0}};
}

json theorem_to_json(const TheoremVerdict& v) {
  return json{{"k", v.k},
              {"condition_holds", v.condition_holds},
              {"gamma_k_nilpotent", v.gamma_k_nilpotent},
              {"consistent", v.consistent},
              {"gamma_k_order", v.gamma_k_order}};
}

json corollary_to_json(const CorollaryVerdict& v) {
  return json{{"metanilpotent", v.metanilpotent},
              {"minimal_k", v.min_k ? json(*v.min_k) : json(nullptr)},
              {"consistent", v.consistent}};
}

std::string witness_text(const Witness& w) {
  std::ostringstream out;
  out << "a=" << format_cycles(w.a) << " |a|=" << w.order_a << "  b=" << format_cycles(w.b)
      << " |b|=" << w.order_b << "  |ab|=" << w.order_ab << " (|a||b|=" << w.order_a * w.order_b
      << ")";
  return out.str();
}

}  // namespace metanil
