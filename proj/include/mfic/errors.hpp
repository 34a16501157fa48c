#ifndef MFIC_ERRORS_HPP
#define MFIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mfic {

struct EmptyCorpusError : std::runtime_error {
    explicit EmptyCorpusError(const std::string& msg) : std::runtime_error(msg) {}
};

struct EmptyVocabularyError : std::runtime_error {
    explicit EmptyVocabularyError(const std::string& msg) : std::runtime_error(msg) {}
};

struct EmptyDatabaseError : std::runtime_error {
    explicit EmptyDatabaseError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DomainError : std::domain_error {
    explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

}  // namespace mfic

#endif
