#pragma once

#include <string>

namespace cellmap::test {

// Runs f and returns the message of the E it throws, or "" if it does not
// throw E. Lets tests assert on distinct error texts.
template <class E, class F>
std::string message_of(F&& f) {
    try {
        f();
    } catch (const E& e) {
        return e.what();
    } catch (...) {
        return "";
    }
    return "";
}

inline bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace cellmap::test
