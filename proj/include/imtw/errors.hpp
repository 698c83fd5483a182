#ifndef IMTW_ERRORS_HPP
#define IMTW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace imtw {

// Contract violation on a caller-supplied argument (bad index, self-loop,
// non-matching input, set not independent, ...).
class invalid_argument_error : public std::runtime_error {
public:
    explicit invalid_argument_error(const std::string& what)
        : std::runtime_error(what) {}
};

// An NP-hard primitive was asked to run beyond its configured size cap.
class cap_exceeded_error : public std::runtime_error {
public:
    cap_exceeded_error(const std::string& op, int n, int cap)
        : std::runtime_error(op + ": instance size " + std::to_string(n) +
                             " exceeds cap " + std::to_string(cap)),
          size(n), limit(cap) {}
    int size;
    int limit;
};

class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace imtw

#endif
