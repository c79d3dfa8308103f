#include "metanil/element_set.hpp"

#include <algorithm>

#include "metanil/errors.hpp"

namespace metanil {

ElementSet ElementSet::from_vector(int degree, std::vector<Perm> elems) {
  for (const Perm& p : elems)
    if (p.degree() != degree)
      throw Error(Errc::degree_mismatch, "element set mixes degrees");
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  ElementSet s(degree);
  s.elems_ = std::move(elems);
  return s;
}

bool ElementSet::contains(const Perm& p) const {
  return std::binary_search(elems_.begin(), elems_.end(), p);
}

}  // namespace metanil
