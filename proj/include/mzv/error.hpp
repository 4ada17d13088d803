#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mzv {

/// Malformed word, composition or polynomial text. `offset` is the byte
/// position in the input at which parsing stopped.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// An argument lies outside the subspace an operation is defined on
/// (e.g. a word ending in x handed to something that needs H^1).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A caller broke an operation's precondition in a way that is not a
/// domain question (non-weight-raising generator, bad prime, ...).
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace mzv
