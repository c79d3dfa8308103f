// Acceptance suite: runs every exit criterion at its stated tolerance and
// prints one pass/fail line per criterion. Exit code 0 iff all pass.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "metanil/catalog.hpp"
#include "metanil/cli.hpp"
#include "metanil/criterion.hpp"
#include "metanil/errors.hpp"
#include "metanil/fitting.hpp"
#include "oracle_closure.hpp"

using namespace metanil;

namespace {

struct CorpusGroups {
  std::vector<CorpusEntry> entries;
  std::vector<Group> groups;
};

CorpusGroups load() {
  CorpusGroups c;
  c.entries = load_corpus(std::string(METANIL_DATA_DIR) + "/corpus.json");
  for (const CorpusEntry& e : c.entries) c.groups.push_back(Group::build(e.spec));
  return c;
}

constexpr int kMaxK = 6;

bool theorem_suite(const CorpusGroups& c, std::ostream& detail) {
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t checks = 0, consistent = 0;
  for (std::size_t gi = 0; gi < c.groups.size(); ++gi)
    for (int k = 1; k <= kMaxK; ++k) {
      TheoremVerdict v = verify_theorem(c.groups[gi], k, ScanMode::canonical, 1);
      ++checks;
      if (v.consistent) ++consistent;
      else detail << " [" << c.entries[gi].name << " k=" << k << " inconsistent]";
    }
  const auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(
      std::chrono::steady_clock::now() - t0);
  detail << checks << " checks over " << c.groups.size() << " groups, " << consistent
         << " consistent, " << elapsed.count() << "s single-threaded";
  return consistent == checks && c.groups.size() >= 25 && elapsed.count() < 300;
}

bool corollary_suite(const CorpusGroups& c, std::ostream& detail) {
  std::size_t consistent = 0;
  for (std::size_t gi = 0; gi < c.groups.size(); ++gi) {
    CorollaryVerdict v = verify_corollary(c.groups[gi]);
    if (v.consistent) ++consistent;
    else detail << " [" << c.entries[gi].name << " inconsistent]";
  }
  detail << consistent << "/" << c.groups.size() << " groups consistent";
  return consistent == c.groups.size();
}

bool named_small_k_cases(const CorpusGroups& c, std::ostream& detail) {
  std::size_t named = 0;
  bool ok = true;
  for (std::size_t gi = 0; gi < c.groups.size(); ++gi) {
    const std::string& name = c.entries[gi].name;
    const bool cyclic_family = name.size() >= 2 && name[0] == 'C' &&
                               name.find('x') == std::string::npos &&
                               std::isdigit(static_cast<unsigned char>(name[1]));
    if (!cyclic_family && name != "Q8" && name != "S3" && name != "S4" && name != "A4" &&
        name != "A5" && name != "SL(2,3)")
      continue;
    ++named;
    TheoremVerdict k1 = baumslag_wiegold(c.groups[gi]);
    TheoremVerdict k2 = verify_theorem(c.groups[gi], 2);
    if (!k1.consistent || !k2.consistent) {
      ok = false;
      detail << " [" << name << " inconsistent]";
    }
  }
  detail << named << " named groups checked at k=1 and k=2";
  return ok && named >= 7;
}

bool lemma_suites(const CorpusGroups& c, std::ostream& detail) {
  bool ok = true;
  std::size_t bbb_checked = 0;
  for (std::size_t gi = 0; gi < c.groups.size(); ++gi)
    for (int k = 1; k <= kMaxK; ++k) {
      if (!check_condition(c.groups[gi], k, ScanMode::fast).holds) continue;
      ++bbb_checked;
      if (!check_lemma_bbb(c.groups[gi], k).empty()) {
        ok = false;
        detail << " [bbb violation in " << c.entries[gi].name << " k=" << k << "]";
      }
    }

  std::size_t gamma_checked = 0;
  for (const std::string name : {"A5", "SL(2,5)"})
    for (std::size_t gi = 0; gi < c.groups.size(); ++gi) {
      if (c.entries[gi].name != name) continue;
      for (int k = 1; k <= 3; ++k)
        for (std::uint64_t q : prime_set(c.groups[gi]).primes) {
          ++gamma_checked;
          if (!check_lemma_gamma(c.groups[gi], k, q)) {
            ok = false;
            detail << " [gamma fails for " << name << " k=" << k << " q=" << q << "]";
          }
        }
    }

  std::size_t meta_checked = 0, solu_checked = 0;
  for (std::size_t gi = 0; gi < c.groups.size(); ++gi) {
    if (is_metanilpotent(c.groups[gi])) {
      ++meta_checked;
      if (!check_lemma_meta(c.groups[gi]).empty()) {
        ok = false;
        detail << " [meta violation in " << c.entries[gi].name << "]";
      }
    }
    if (is_soluble(c.groups[gi])) {
      if (auto k = minimal_k(c.groups[gi])) {
        ++solu_checked;
        if (!check_lemma_solu(c.groups[gi], *k)) {
          ok = false;
          detail << " [solu fails in " << c.entries[gi].name << "]";
        }
      }
    }
  }
  detail << "bbb " << bbb_checked << " (G,k) pairs, gamma " << gamma_checked << " cases, meta "
         << meta_checked << " groups, solu " << solu_checked << " groups";
  return ok && gamma_checked == 18 && meta_checked > 0 && solu_checked > 0;
}

bool oracle_equivalences(const CorpusGroups& c, std::ostream& detail) {
  bool ok = true;
  for (std::size_t gi = 0; gi < c.groups.size(); ++gi) {
    const Group& g = c.groups[gi];
    if (g.order() <= 5000) {
      auto closure = acceptance_oracle::closure(g.degree(), g.spec().generators);
      if (closure.size() != g.order()) {
        ok = false;
        detail << " [chain/closure order mismatch for " << c.entries[gi].name << "]";
      }
    }
    if (g.order() <= 2000) {
      Subgroup engel = fitting_subgroup(g);
      Subgroup closure_route = fitting_subgroup_by_normal_closure(g);
      if (!same_subgroup(engel, closure_route) ||
          !(engel.group.elements() == closure_route.group.elements())) {
        ok = false;
        detail << " [Fitting route mismatch for " << c.entries[gi].name << "]";
      }
    }
    SeriesRecord via_values = lower_central_series(g);
    SeriesRecord via_brackets = lower_central_series_by_commutators(g);
    for (int k = 1; k <= kMaxK; ++k) {
      const Subgroup& a = k <= static_cast<int>(via_values.terms.size())
                              ? via_values.terms[static_cast<std::size_t>(k - 1)]
                              : via_values.terms.back();
      const Subgroup& b = k <= static_cast<int>(via_brackets.terms.size())
                              ? via_brackets.terms[static_cast<std::size_t>(k - 1)]
                              : via_brackets.terms.back();
      if (!same_subgroup(a, b)) {
        ok = false;
        detail << " [gamma route mismatch for " << c.entries[gi].name << " k=" << k << "]";
      }
    }
  }
  detail << "closure, Fitting and gamma-route equalities over " << c.groups.size() << " groups";
  return ok;
}

bool pinned_structural_facts(const CorpusGroups&, std::ostream& detail) {
  bool ok = true;
  auto expect = [&](bool cond, const char* what) {
    if (!cond) {
      ok = false;
      detail << " [" << what << " failed]";
    }
  };
  Group s4 = Group::build(symmetric(4));
  Group s3 = Group::build(symmetric(3));
  expect(fitting_subgroup(s4).order() == 4, "|F(S4)|=4");
  expect(fitting_height(s4) == 3, "h(S4)=3");
  expect(fitting_height(s3) == 2, "h(S3)=2");
  expect(generated_subgroup(s3, gamma_values(s3, 2)).order() == 3, "|gamma_2(S3)|=3");
  for (int k = 2; k <= kMaxK; ++k)
    expect(generated_subgroup(s4, gamma_values(s4, k)).order() == 12, "|gamma_k(S4)|=12");
  Group sl23 = Group::build(sl2(3));
  expect(is_metanilpotent(sl23), "SL(2,3) metanilpotent");
  expect(fitting_subgroup(sl23).order() == 8, "|F(SL(2,3))|=8");
  expect(fitting_subgroup(Group::build(alternating(5))).trivial(), "F(A5)=1");
  ConditionReport s3k1 = check_condition(s3, 1, ScanMode::canonical);
  expect(!s3k1.holds && s3k1.witness && s3k1.witness->order_a == 2 &&
             s3k1.witness->order_b == 3 &&
             (s3k1.witness->order_ab == 2 || s3k1.witness->order_ab == 3),
         "S3 k=1 witness orders (2,3,m) with m in {2,3}");
  detail << "8 pinned fact families";
  return ok;
}

bool coprime_action_suite(const CorpusGroups& c, std::ostream& detail) {
  bool ok = true;
  std::size_t triples = 0;
  bool saw_s3_a3 = false, saw_s4_v4 = false;
  for (std::size_t gi = 0; gi < c.groups.size(); ++gi)
    for (const CoprimeActionSpec& action : c.entries[gi].coprime_actions) {
      ++triples;
      Subgroup n = generated_subgroup(c.groups[gi], action.subgroup_generators);
      CoprimeActionReport rep = check_coprime_action(c.groups[gi], n, action.element);
      if (!rep.all_hold()) {
        ok = false;
        detail << " [triple " << triples << " in " << c.entries[gi].name << " fails]";
      }
      if (c.entries[gi].name == "S3" && n.order() == 3 && element_order(action.element) == 2)
        saw_s3_a3 = true;
      if (c.entries[gi].name == "S4" && n.order() == 4 && element_order(action.element) == 3)
        saw_s4_v4 = true;
    }
  detail << triples << " (G, N, a) triples";
  return ok && triples >= 10 && saw_s3_a3 && saw_s4_v4;
}

bool determinism(const CorpusGroups&, std::ostream& detail) {
  RunConfig config;
  config.corpus = std::string(METANIL_DATA_DIR) + "/corpus.json";
  config.k_lo = 1;
  config.k_hi = kMaxK;
  config.mode = ScanMode::canonical;
  config.jobs = 1;
  bool ok = true;
  for (auto format : {RunConfig::Format::json, RunConfig::Format::text}) {
    config.format = format;
    VerifyOutput first = run_verify(config);
    RunConfig parallel = config;
    parallel.jobs = 8;
    VerifyOutput second = run_verify(parallel);
    if (first.report != second.report || !first.all_consistent) {
      ok = false;
      detail << " [report differs in " << (format == RunConfig::Format::json ? "json" : "text")
             << " format]";
    }
  }
  detail << "canonical corpus reports byte-identical for jobs=1 vs jobs=8 (json and text)";
  return ok;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<bool(const CorpusGroups&, std::ostream&)> run;
  };
  const Criterion criteria[] = {
      {"theorem suite (condition == nilpotency of gamma_k, k=1..6)", theorem_suite},
      {"corollary suite (metanilpotent == minimal k exists)", corollary_suite},
      {"k=1 and k=2 instances on the named groups", named_small_k_cases},
      {"lemma suites (bbb, gamma, meta, solu)", lemma_suites},
      {"oracle equivalences (closure order, Fitting routes, gamma routes)", oracle_equivalences},
      {"pinned structural facts", pinned_structural_facts},
      {"coprime-action suite", coprime_action_suite},
      {"determinism of canonical reports", determinism},
  };

  CorpusGroups corpus;
  try {
    corpus = load();
  } catch (const std::exception& e) {
    std::cout << "FAIL  corpus load: " << e.what() << '\n';
    return 1;
  }

  int failures = 0;
  int index = 0;
  for (const Criterion& criterion : criteria) {
    ++index;
    std::ostringstream detail;
    bool pass = false;
    try {
      pass = criterion.run(corpus, detail);
    } catch (const std::exception& e) {
      detail << " [exception: " << e.what() << "]";
    }
    if (!pass) ++failures;
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << index << ": " << criterion.name
              << "  -- " << detail.str() << '\n';
  }
  std::cout << (failures == 0 ? "ACCEPTANCE: all criteria pass"
                              : "ACCEPTANCE: " + std::to_string(failures) + " criteria failed")
            << '\n';
  return failures == 0 ? 0 : 1;
}
