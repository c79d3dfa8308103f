// Recomputes the expected facts of the standard corpus with the library's
// own operations and writes the manifest. Run from the repository root:
//
//   metanil-pin-corpus data/corpus.json
//
// The shipped manifest was produced this way; the regression suite
// recomputes every pinned fact and compares.

#include <iostream>

#include "metanil/catalog.hpp"
#include "metanil/criterion.hpp"
#include "metanil/fitting.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: metanil-pin-corpus <output-path>\n";
    return 2;
  }
  try {
    std::vector<metanil::CorpusEntry> corpus = metanil::standard_corpus();
    for (metanil::CorpusEntry& entry : corpus) {
      metanil::Group g = metanil::Group::build(entry.spec);
      metanil::ExpectedFacts facts;
      facts.order = g.order();
      facts.soluble = metanil::is_soluble(g);
      facts.metanilpotent = metanil::is_metanilpotent(g);
      facts.minimal_k = metanil::minimal_k(g);
      facts.fitting_order = metanil::fitting_subgroup(g).order();
      entry.expected = facts;
      std::cerr << entry.name << ": order " << facts.order << ", soluble " << facts.soluble
                << ", metanilpotent " << facts.metanilpotent << ", minimal_k "
                << (facts.minimal_k ? std::to_string(*facts.minimal_k) : "none") << ", |F| "
                << facts.fitting_order << '\n';
    }
    metanil::save_corpus(corpus, argv[1]);
    std::cerr << "wrote " << corpus.size() << " entries to " << argv[1] << '\n';
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
