#ifndef GBX_ERRORS_HPP
#define GBX_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace gbx {

// Malformed input text or JSON (CLI exit code 2).
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Instance size exceeds an enumeration guard (CLI exit code 2).
struct guard_error : std::runtime_error {
  explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

// A certificate was refused; `stage` names the failing pipeline step
// (CLI exit code 1).
struct certify_error : std::runtime_error {
  std::string stage;
  certify_error(std::string stage_name, const std::string& what)
      : std::runtime_error(stage_name + ": " + what), stage(std::move(stage_name)) {}
};

}  // namespace gbx

#endif
