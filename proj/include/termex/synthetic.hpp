#ifndef TERMEX_SYNTHETIC_HPP
#define TERMEX_SYNTHETIC_HPP

#include <cstddef>
#include <string>

namespace termex {

// Deterministic synthetic inputs for scale tests and benchmarks: a tagged
// corpus in the vertical format and a matching terminology. The same spec
// always yields the same bytes.
struct SyntheticSpec {
    std::size_t target_words = 440000;
    std::size_t terminology_terms = 5000;
    unsigned seed = 1;
};

std::string make_synthetic_corpus_text(const SyntheticSpec& spec);
std::string make_synthetic_terminology_text(const SyntheticSpec& spec);

} // namespace termex

#endif
