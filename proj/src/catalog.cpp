#include "metanil/catalog.hpp"

#include <array>
#include <cctype>
#include <fstream>
#include <numeric>

#include "json.hpp"
#include "metanil/errors.hpp"

namespace metanil {

namespace {

using nlohmann::json;

Perm rotation(int n) {
  std::vector<int> imgs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) imgs[static_cast<std::size_t>(i)] = (i + 1) % n;
  return Perm(std::move(imgs));
}

int sl2_vector_index(int p, int x, int y) {
  // Nonzero vectors (x, y) enumerated row-major; (0, 0) is skipped.
  int idx = x * p + y;
  return idx - 1;
}

Perm sl2_matrix_perm(int p, std::array<int, 4> m) {
  const int degree = p * p - 1;
  std::vector<int> imgs(static_cast<std::size_t>(degree));
  for (int x = 0; x < p; ++x)
    for (int y = 0; y < p; ++y) {
      if (x == 0 && y == 0) continue;
      int nx = (m[0] * x + m[1] * y) % p;
      int ny = (m[2] * x + m[3] * y) % p;
      imgs[static_cast<std::size_t>(sl2_vector_index(p, x, y))] = sl2_vector_index(p, nx, ny);
    }
  return Perm(std::move(imgs));
}

GroupSpec spec_of(std::string name, int degree, std::vector<Perm> gens) {
  GroupSpec s{std::move(name), degree, std::move(gens)};
  s.validate();
  return s;
}

json spec_to_json(const GroupSpec& spec) {
  json gens = json::array();
  for (const Perm& g : spec.generators) gens.push_back(g.images());
  return json{{"name", spec.name}, {"degree", spec.degree}, {"generators", gens}};
}

GroupSpec spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("name") || !j.contains("degree") || !j.contains("generators"))
    throw Error(Errc::parse_error, "group spec needs name, degree and generators fields");
  if (!j["name"].is_string() || !j["degree"].is_number_integer() || !j["generators"].is_array())
    throw Error(Errc::parse_error, "group spec field has the wrong type");
  GroupSpec spec;
  spec.name = j["name"].get<std::string>();
  spec.degree = j["degree"].get<int>();
  for (const json& arr : j["generators"]) {
    if (!arr.is_array()) throw Error(Errc::parse_error, "generator entry is not an array");
    std::vector<int> imgs;
    imgs.reserve(arr.size());
    for (const json& v : arr) {
      if (!v.is_number_integer()) throw Error(Errc::parse_error, "generator image is not an integer");
      imgs.push_back(v.get<int>());
    }
    if (static_cast<int>(imgs.size()) != spec.degree)
      throw Error(Errc::invalid_spec, "generator length differs from the degree");
    spec.generators.push_back(Perm(std::move(imgs)));
  }
  spec.validate();
  return spec;
}

json perm_list_to_json(const std::vector<Perm>& perms) {
  json out = json::array();
  for (const Perm& p : perms) out.push_back(p.images());
  return out;
}

std::vector<Perm> perm_list_from_json(const json& j, int degree) {
  std::vector<Perm> out;
  for (const json& arr : j) {
    std::vector<int> imgs = arr.get<std::vector<int>>();
    if (static_cast<int>(imgs.size()) != degree)
      throw Error(Errc::invalid_spec, "permutation length differs from the degree");
    out.push_back(Perm(std::move(imgs)));
  }
  return out;
}

}  // namespace

GroupSpec cyclic(int n) {
  if (n < 1) throw Error(Errc::unsupported_parameter, "cyclic order must be at least 1");
  if (n == 1) return spec_of("C1", 1, {Perm(1)});
  return spec_of("C" + std::to_string(n), n, {rotation(n)});
}

GroupSpec dihedral(int n) {
  if (n < 1) throw Error(Errc::unsupported_parameter, "dihedral parameter must be at least 1");
  if (n == 1) return spec_of("D1", 2, {Perm(std::vector<int>{1, 0})});
  if (n == 2)
    return spec_of("D2", 4, {Perm(std::vector<int>{1, 0, 2, 3}), Perm(std::vector<int>{0, 1, 3, 2})});
  std::vector<int> reflection(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) reflection[static_cast<std::size_t>(i)] = (n - i) % n;
  return spec_of("D" + std::to_string(n), n, {rotation(n), Perm(std::move(reflection))});
}

GroupSpec symmetric(int n) {
  if (n < 1) throw Error(Errc::unsupported_parameter, "symmetric degree must be at least 1");
  if (n == 1) return spec_of("S1", 1, {Perm(1)});
  std::vector<int> swap01(static_cast<std::size_t>(n));
  std::iota(swap01.begin(), swap01.end(), 0);
  std::swap(swap01[0], swap01[1]);
  if (n == 2) return spec_of("S2", 2, {Perm(std::move(swap01))});
  return spec_of("S" + std::to_string(n), n, {Perm(std::move(swap01)), rotation(n)});
}

GroupSpec alternating(int n) {
  if (n < 1) throw Error(Errc::unsupported_parameter, "alternating degree must be at least 1");
  if (n <= 2) return spec_of("A" + std::to_string(n), n, {Perm(n)});
  std::vector<Perm> gens;
  for (int i = 2; i < n; ++i) {
    std::vector<int> imgs(static_cast<std::size_t>(n));
    std::iota(imgs.begin(), imgs.end(), 0);
    imgs[0] = 1;
    imgs[1] = i;
    imgs[static_cast<std::size_t>(i)] = 0;
    gens.push_back(Perm(std::move(imgs)));
  }
  return spec_of("A" + std::to_string(n), n, std::move(gens));
}

GroupSpec quaternion8() {
  // Right regular action on {1, i, -1, -i, j, k, -j, -k}.
  return spec_of("Q8", 8,
                 {Perm(std::vector<int>{1, 2, 3, 0, 7, 4, 5, 6}),
                  Perm(std::vector<int>{4, 5, 6, 7, 2, 3, 0, 1})});
}

GroupSpec sl2(int p) {
  if (p != 3 && p != 5)
    throw Error(Errc::unsupported_parameter, "sl2 supports p in {3, 5}");
  Perm s = sl2_matrix_perm(p, {0, p - 1, 1, 0});  // [[0, -1], [1, 0]]
  Perm t = sl2_matrix_perm(p, {1, 1, 0, 1});      // [[1, 1], [0, 1]]
  return spec_of("SL(2," + std::to_string(p) + ")", p * p - 1, {std::move(s), std::move(t)});
}

GroupSpec frobenius20() {
  // Translation x -> x + 1 and multiplication by the primitive root 2.
  return spec_of("F20", 5,
                 {rotation(5), Perm(std::vector<int>{0, 2, 4, 1, 3})});
}

GroupSpec direct_product(const GroupSpec& a, const GroupSpec& b) {
  const int degree = a.degree + b.degree;
  std::vector<Perm> gens;
  gens.reserve(a.generators.size() + b.generators.size());
  for (const Perm& g : a.generators) {
    std::vector<int> imgs(static_cast<std::size_t>(degree));
    std::iota(imgs.begin(), imgs.end(), 0);
    for (int i = 0; i < a.degree; ++i) imgs[static_cast<std::size_t>(i)] = g[i];
    gens.push_back(Perm(std::move(imgs)));
  }
  for (const Perm& g : b.generators) {
    std::vector<int> imgs(static_cast<std::size_t>(degree));
    std::iota(imgs.begin(), imgs.end(), 0);
    for (int i = 0; i < b.degree; ++i) imgs[static_cast<std::size_t>(a.degree + i)] = a.degree + g[i];
    gens.push_back(Perm(std::move(imgs)));
  }
  return spec_of(a.name + "x" + b.name, degree, std::move(gens));
}

GroupSpec load_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot open " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(Errc::parse_error, path.string() + ": " + e.what());
  }
  return spec_from_json(j);
}

void save_spec(const GroupSpec& spec, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::parse_error, "cannot write " + path.string());
  out << spec_to_json(spec).dump(2) << '\n';
}

std::optional<GroupSpec> builtin_spec(const std::string& name) {
  if (name.empty()) return std::nullopt;
  auto split = name.find('x');
  if (split != std::string::npos && split > 0 && split + 1 < name.size()) {
    auto left = builtin_spec(name.substr(0, split));
    auto right = builtin_spec(name.substr(split + 1));
    if (left && right) return direct_product(*left, *right);
    return std::nullopt;
  }
  if (name == "Q8") return quaternion8();
  if (name == "F20") return frobenius20();
  if (name == "SL(2,3)") return sl2(3);
  if (name == "SL(2,5)") return sl2(5);
  if (name.size() >= 2 && std::isdigit(static_cast<unsigned char>(name[1]))) {
    int n = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
      n = n * 10 + (name[i] - '0');
    }
    if (n < 1 || n > 1000) return std::nullopt;
    switch (name[0]) {
      case 'C': return cyclic(n);
      case 'D': return dihedral(n);
      case 'S': return symmetric(n);
      case 'A': return alternating(n);
      default: return std::nullopt;
    }
  }
  return std::nullopt;
}

std::vector<CorpusEntry> standard_corpus() {
  std::vector<CorpusEntry> corpus;
  auto add = [&corpus](GroupSpec spec) -> CorpusEntry& {
    CorpusEntry e;
    e.name = spec.name;
    e.spec = std::move(spec);
    corpus.push_back(std::move(e));
    return corpus.back();
  };

  const Perm s3_transposition(std::vector<int>{1, 0, 2});
  const Perm s3_rotation(std::vector<int>{1, 2, 0});
  const std::vector<Perm> v4_gens{Perm(std::vector<int>{1, 0, 3, 2}),
                                  Perm(std::vector<int>{2, 3, 0, 1})};

  for (int n = 1; n <= 24; ++n) add(cyclic(n));
  {
    // C6 = <g>: N = <g^2> of order 3, acted on by the involution g^3.
    CorpusEntry& c6 = corpus[5];
    c6.coprime_actions.push_back(
        {{Perm(std::vector<int>{2, 3, 4, 5, 0, 1})}, Perm(std::vector<int>{3, 4, 5, 0, 1, 2})});
  }
  for (int n = 1; n <= 12; ++n) {
    CorpusEntry& e = add(dihedral(n));
    if (n == 4) e.tower = TowerSpec{{{2, e.spec.generators}}};
    if (n == 6) {
      // Rotation-squared subgroup of order 3, acted on by a reflection.
      e.coprime_actions.push_back(
          {{Perm(std::vector<int>{2, 3, 4, 5, 0, 1})}, Perm(std::vector<int>{0, 5, 4, 3, 2, 1})});
    }
  }
  {
    CorpusEntry& e = add(quaternion8());
    e.tower = TowerSpec{{{2, e.spec.generators}}};
  }
  {
    CorpusEntry& e = add(symmetric(3));
    e.tower = TowerSpec{{{2, {s3_transposition}}, {3, {s3_rotation}}}};
    e.coprime_actions.push_back({{s3_rotation}, s3_transposition});
  }
  {
    CorpusEntry& e = add(symmetric(4));
    e.tower = TowerSpec{{{2, {Perm(std::vector<int>{1, 0, 2, 3})}},
                         {3, {Perm(std::vector<int>{1, 2, 0, 3})}},
                         {2, v4_gens}}};
    e.coprime_actions.push_back({v4_gens, Perm(std::vector<int>{1, 2, 0, 3})});
    e.coprime_actions.push_back({v4_gens, Perm(std::vector<int>{0, 2, 3, 1})});
  }
  {
    // The 5-cycle subgroup of S5 normalized by the order-4 map i -> 2i (mod 5).
    CorpusEntry& e = add(symmetric(5));
    e.coprime_actions.push_back(
        {{Perm(std::vector<int>{1, 2, 3, 4, 0})}, Perm(std::vector<int>{0, 2, 4, 1, 3})});
  }
  {
    CorpusEntry& e = add(alternating(4));
    e.tower = TowerSpec{{{3, {Perm(std::vector<int>{1, 2, 0, 3})}}, {2, v4_gens}}};
    e.coprime_actions.push_back({v4_gens, Perm(std::vector<int>{1, 2, 0, 3})});
  }
  add(alternating(5));
  {
    CorpusEntry& e = add(sl2(3));
    const std::vector<Perm> q8_gens{sl2_matrix_perm(3, {0, 2, 1, 0}),
                                    sl2_matrix_perm(3, {1, 1, 1, 2})};
    const Perm t = sl2_matrix_perm(3, {1, 1, 0, 1});
    e.tower = TowerSpec{{{3, {t}}, {2, q8_gens}}};
    e.coprime_actions.push_back({q8_gens, t});
  }
  add(sl2(5));
  {
    CorpusEntry& e = add(frobenius20());
    const Perm t = rotation(5);
    const Perm m(std::vector<int>{0, 2, 4, 1, 3});
    e.tower = TowerSpec{{{2, {m}}, {5, {t}}}};
    e.coprime_actions.push_back({{t}, m});
    e.coprime_actions.push_back({{t}, compose(m, m)});
  }
  {
    CorpusEntry& e = add(direct_product(symmetric(3), symmetric(3)));
    const Perm r1(std::vector<int>{1, 2, 0, 3, 4, 5});
    const Perm r2(std::vector<int>{0, 1, 2, 4, 5, 3});
    const Perm t12(std::vector<int>{1, 0, 2, 4, 3, 5});
    e.tower = TowerSpec{{{2, {Perm(std::vector<int>{1, 0, 2, 3, 4, 5}),
                              Perm(std::vector<int>{0, 1, 2, 4, 3, 5})}},
                         {3, {r1, r2}}}};
    e.coprime_actions.push_back({{r1, r2}, t12});
  }
  {
    CorpusEntry& e = add(direct_product(alternating(4), cyclic(2)));
    const std::vector<Perm> v4_wide{Perm(std::vector<int>{1, 0, 3, 2, 4, 5}),
                                    Perm(std::vector<int>{2, 3, 0, 1, 4, 5})};
    const Perm r(std::vector<int>{1, 2, 0, 3, 4, 5});
    e.tower = TowerSpec{{{3, {r}}, {2, v4_wide}}};
    e.coprime_actions.push_back({v4_wide, r});
  }
  {
    CorpusEntry& e = add(direct_product(symmetric(4), cyclic(3)));
    e.tower = TowerSpec{{{2, {Perm(std::vector<int>{1, 0, 2, 3, 4, 5, 6})}},
                         {3, {Perm(std::vector<int>{1, 2, 0, 3, 4, 5, 6})}},
                         {2, {Perm(std::vector<int>{1, 0, 3, 2, 4, 5, 6}),
                              Perm(std::vector<int>{2, 3, 0, 1, 4, 5, 6})}}}};
  }
  return corpus;
}

std::vector<CorpusEntry> load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse_error, "cannot open " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(Errc::parse_error, path.string() + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("version") || j["version"] != 1)
    throw Error(Errc::parse_error, path.string() + ": expected a version-1 corpus manifest");
  if (!j.contains("groups") || !j["groups"].is_array() || j["groups"].empty())
    throw Error(Errc::parse_error, path.string() + ": corpus contains no groups");

  std::vector<CorpusEntry> corpus;
  for (const json& ej : j["groups"]) {
    CorpusEntry e;
    e.spec = spec_from_json(ej.at("spec"));
    e.name = ej.contains("name") ? ej["name"].get<std::string>() : e.spec.name;
    if (ej.contains("expected") && !ej["expected"].is_null()) {
      const json& x = ej["expected"];
      ExpectedFacts facts;
      facts.order = x.at("order").get<std::uint64_t>();
      facts.soluble = x.at("soluble").get<bool>();
      facts.metanilpotent = x.at("metanilpotent").get<bool>();
      if (!x.at("minimal_k").is_null()) facts.minimal_k = x["minimal_k"].get<int>();
      facts.fitting_order = x.at("fitting_order").get<std::uint64_t>();
      e.expected = facts;
    }
    if (ej.contains("tower") && !ej["tower"].is_null()) {
      TowerSpec tower;
      for (const json& pj : ej["tower"])
        tower.parts.emplace_back(pj.at("prime").get<std::uint64_t>(),
                                 perm_list_from_json(pj.at("generators"), e.spec.degree));
      e.tower = std::move(tower);
    }
    if (ej.contains("coprime_actions")) {
      for (const json& cj : ej["coprime_actions"]) {
        CoprimeActionSpec action;
        action.subgroup_generators = perm_list_from_json(cj.at("subgroup"), e.spec.degree);
        std::vector<int> imgs = cj.at("element").get<std::vector<int>>();
        action.element = Perm(std::move(imgs));
        e.coprime_actions.push_back(std::move(action));
      }
    }
    corpus.push_back(std::move(e));
  }
  return corpus;
}

void save_corpus(const std::vector<CorpusEntry>& corpus, const std::filesystem::path& path) {
  json groups = json::array();
  for (const CorpusEntry& e : corpus) {
    json ej{{"name", e.name}, {"spec", spec_to_json(e.spec)}};
    if (e.expected) {
      ej["expected"] = json{{"order", e.expected->order},
                            {"soluble", e.expected->soluble},
                            {"metanilpotent", e.expected->metanilpotent},
                            {"minimal_k", e.expected->minimal_k ? json(*e.expected->minimal_k)
                                                                : json(nullptr)},
                            {"fitting_order", e.expected->fitting_order}};
    }
    if (e.tower) {
      json tj = json::array();
      for (const auto& [prime, gens] : e.tower->parts)
        tj.push_back(json{{"prime", prime}, {"generators", perm_list_to_json(gens)}});
      ej["tower"] = std::move(tj);
    }
    if (!e.coprime_actions.empty()) {
      json cj = json::array();
      for (const CoprimeActionSpec& a : e.coprime_actions)
        cj.push_back(json{{"subgroup", perm_list_to_json(a.subgroup_generators)},
                          {"element", a.element.images()}});
      ej["coprime_actions"] = std::move(cj);
    }
    groups.push_back(std::move(ej));
  }
  std::ofstream out(path);
  if (!out) throw Error(Errc::parse_error, "cannot write " + path.string());
  out << json{{"version", 1}, {"groups", groups}}.dump(2) << '\n';
}

}  // namespace metanil
