#ifndef MFIC_STEMMER_HPP
#define MFIC_STEMMER_HPP

#include <string>

namespace mfic {

// Porter2 (Snowball English) stemmer. Expects a lowercase word; returns
// its stem. Deterministic and total; words of length <= 2 pass through.
std::string stem(const std::string& word);

}  // namespace mfic

#endif
