#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "metanil/group.hpp"

namespace metanil {

GroupSpec cyclic(int n);
GroupSpec dihedral(int n);
GroupSpec symmetric(int n);
GroupSpec alternating(int n);
GroupSpec quaternion8();
/// SL(2, p) acting on the p^2 - 1 nonzero vectors of the plane over the
/// p-element field; p in {3, 5}.
GroupSpec sl2(int p);
/// The affine maps x -> ax + b over the 5-element field on 5 points
/// (order 20).
GroupSpec frobenius20();

/// Generators act on disjoint blocks; degree adds, order multiplies.
GroupSpec direct_product(const GroupSpec& a, const GroupSpec& b);

/// Group-spec file: {"name": string, "degree": n, "generators": [[imgs...], ...]}
/// with 0-based image arrays. The only ingestion path for user groups.
GroupSpec load_spec(const std::filesystem::path& path);
void save_spec(const GroupSpec& spec, const std::filesystem::path& path);

/// Builtin name resolution: C<n>, D<n>, S<n>, A<n>, Q8, F20, SL(2,3),
/// SL(2,5), and 'x'-joined products such as S3xS3.
std::optional<GroupSpec> builtin_spec(const std::string& name);

/// Hand-built tower data, parts top to bottom: (prime, generators).
struct TowerSpec {
  std::vector<std::pair<std::uint64_t, std::vector<Perm>>> parts;
};

/// A coprime-action test triple: the subgroup N (by generators) and the
/// acting element a, both inside the entry's group.
struct CoprimeActionSpec {
  std::vector<Perm> subgroup_generators;
  Perm element;
};

/// Facts pinned by the pin tool (never hand-typed); regression tests
/// recompute and compare them.
struct ExpectedFacts {
  std::uint64_t order = 0;
  bool soluble = false;
  bool metanilpotent = false;
  std::optional<int> minimal_k;
  std::uint64_t fitting_order = 0;
};

struct CorpusEntry {
  std::string name;
  GroupSpec spec;
  std::optional<ExpectedFacts> expected;
  std::optional<TowerSpec> tower;
  std::vector<CoprimeActionSpec> coprime_actions;
};

/// The built-in corpus: cyclic and dihedral families, the symmetric /
/// alternating / quasisimple staples, the order-20 Frobenius group and a
/// few direct products; spans nilpotent, metanilpotent non-nilpotent,
/// Fitting-height-3, perfect and simple groups.
std::vector<CorpusEntry> standard_corpus();

/// Corpus manifest (JSON, "version": 1). Throws Errc::parse_error on
/// malformed files or an empty group list.
std::vector<CorpusEntry> load_corpus(const std::filesystem::path& path);
void save_corpus(const std::vector<CorpusEntry>& corpus, const std::filesystem::path& path);

}  // namespace metanil
