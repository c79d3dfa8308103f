#include "metanil/perm.hpp"

#include <numeric>
#include <sstream>

#include "metanil/errors.hpp"

namespace metanil {

const char* to_string(Errc code) {
  switch (code) {
    case Errc::degree_mismatch: return "DegreeMismatch";
    case Errc::invalid_spec: return "InvalidSpec";
    case Errc::parse_error: return "ParseError";
    case Errc::too_large: return "TooLarge";
    case Errc::not_member: return "NotMember";
    case Errc::not_normal: return "NotNormal";
    case Errc::not_soluble: return "NotSoluble";
    case Errc::not_coprime: return "NotCoprime";
    case Errc::not_perfect: return "NotPerfect";
    case Errc::not_metanilpotent: return "NotMetanilpotent";
    case Errc::hypothesis_not_met: return "HypothesisNotMet";
    case Errc::no_witness: return "NoWitness";
    case Errc::unsupported_parameter: return "UnsupportedParameter";
    case Errc::internal_inconsistency: return "InternalInconsistency";
  }
  return "UnknownError";
}

Perm::Perm(int degree) : imgs_(static_cast<std::size_t>(degree)) {
  std::iota(imgs_.begin(), imgs_.end(), 0);
}

Perm::Perm(std::vector<int> images) : imgs_(std::move(images)) {
  std::vector<bool> seen(imgs_.size(), false);
  for (int v : imgs_) {
    if (v < 0 || v >= degree() || seen[static_cast<std::size_t>(v)])
      throw Error(Errc::invalid_spec,
                  "image array is not a permutation of 0.." + std::to_string(degree() - 1));
    seen[static_cast<std::size_t>(v)] = true;
  }
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (imgs_[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

int Perm::first_moved_point() const {
  for (int i = 0; i < degree(); ++i)
    if (imgs_[static_cast<std::size_t>(i)] != i) return i;
  return -1;
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw Error(Errc::degree_mismatch, "compose: degrees " + std::to_string(p.degree()) +
                                           " and " + std::to_string(q.degree()));
  std::vector<int> out(static_cast<std::size_t>(p.degree()));
  for (int i = 0; i < p.degree(); ++i) out[static_cast<std::size_t>(i)] = q[p[i]];
  return Perm::unchecked(std::move(out));
}

Perm inverse(const Perm& p) {
  std::vector<int> out(static_cast<std::size_t>(p.degree()));
  for (int i = 0; i < p.degree(); ++i) out[static_cast<std::size_t>(p[i])] = i;
  return Perm::unchecked(std::move(out));
}

Perm conjugate(const Perm& x, const Perm& y) {
  return compose(compose(inverse(y), x), y);
}

Perm commutator(const Perm& x, const Perm& y) {
  return compose(compose(compose(inverse(x), inverse(y)), x), y);
}

Perm power(const Perm& p, std::int64_t n) {
  Perm base = n < 0 ? inverse(p) : p;
  std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-n) : static_cast<std::uint64_t>(n);
  Perm acc(p.degree());
  while (e > 0) {
    if (e & 1) acc = compose(acc, base);
    base = compose(base, base);
    e >>= 1;
  }
  return acc;
}

std::uint64_t element_order(const Perm& p) {
  std::uint64_t order = 1;
  std::vector<bool> seen(static_cast<std::size_t>(p.degree()), false);
  for (int i = 0; i < p.degree(); ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    std::uint64_t len = 0;
    int j = i;
    do {
      seen[static_cast<std::size_t>(j)] = true;
      j = p[j];
      ++len;
    } while (j != i);
    order = std::lcm(order, len);
  }
  return order;
}

std::string format_cycles(const Perm& p) {
  std::ostringstream out;
  std::vector<bool> seen(static_cast<std::size_t>(p.degree()), false);
  bool any = false;
  for (int i = 0; i < p.degree(); ++i) {
    if (seen[static_cast<std::size_t>(i)] || p[i] == i) continue;
    any = true;
    out << '(';
    int j = i;
    bool first = true;
    do {
      if (!first) out << ' ';
      first = false;
      out << j;
      seen[static_cast<std::size_t>(j)] = true;
      j = p[j];
    } while (j != i);
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

std::size_t PermHash::operator()(const Perm& p) const {
  // FNV-1a over the image sequence.
  std::size_t h = 14695981039346656037ull;
  for (int v : p.images()) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace metanil
