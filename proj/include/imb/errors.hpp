#pragma once

#include <stdexcept>
#include <string>

namespace imb {

/// A component of G\S is not a clique of true twins; `u`,`v` name the
/// offending pair (non-adjacent, or differing in cover neighborhood).
struct NotATwinCover : std::runtime_error {
    int u, v;
    NotATwinCover(int u_, int v_, const std::string& what)
        : std::runtime_error(what), u(u_), v(v_) {}
};

struct TooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TooLargeToExpand : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidLayout : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IncompleteSpec : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StateBudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MalformedCertificate : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace imb
