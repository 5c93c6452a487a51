#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace nhf {

using cplx = std::complex<double>;
using json = nlohmann::ordered_json;

inline constexpr double two_pi = 6.283185307179586476925286766559;

// Process-wide status codes; mirror the CLI exit codes.
enum class Status : int {
  ok = 0,
  invariant = 1,   // a measured invariant exceeded its tolerance
  parse = 2,       // malformed or semantically invalid input/config
  inadmissible = 3,// datum incompatible with the symbol's zero set
  resolution = 4,  // grid/precision insufficient for the request
  internal = 5,
};

class Error : public std::runtime_error {
 public:
  Error(Status s, const std::string& what, json details = json::object())
      : std::runtime_error(what), status(s), details(std::move(details)) {}
  Status status;
  json details;
};

inline void require(bool cond, Status s, const std::string& what) {
  if (!cond) throw Error(s, what);
}

}  // namespace nhf
