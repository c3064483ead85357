#ifndef ARBBLOCK_ERRORS_HPP
#define ARBBLOCK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace arbblock {

// Bad caller input: malformed graph text, out-of-range ids, violated
// preconditions. Maps to CLI exit code 1.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A hard instance-size cap was exceeded (exponential oracle or solver sweep
// invoked beyond its configured limit). Maps to CLI exit code 2.
class capacity_error : public std::runtime_error {
public:
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// A certified internal identity failed (duality gap, cut/indegree mismatch,
// unverifiable representative tree). Always a bug trap, never user error.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace arbblock

#endif
