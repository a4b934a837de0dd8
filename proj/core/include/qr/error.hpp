#pragma once

#include <stdexcept>
#include <string>

namespace qr {

// Failure categories, mirrored by the CLI exit codes:
//   input      -> 2  (malformed tables, ring mismatches, bad arguments)
//   hypothesis -> 1  (a mathematical precondition does not hold)
//   resource   -> 3  (a configured cap was exceeded)
enum class errc { input, hypothesis, resource };

class error : public std::runtime_error {
public:
  error(errc kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  errc kind() const noexcept { return kind_; }

private:
  errc kind_;
};

[[noreturn]] inline void fail_input(const std::string& what) { throw error(errc::input, what); }
[[noreturn]] inline void fail_hypothesis(const std::string& what) { throw error(errc::hypothesis, what); }
[[noreturn]] inline void fail_resource(const std::string& what) { throw error(errc::resource, what); }

}  // namespace qr
