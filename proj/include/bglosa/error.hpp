#pragma once

#include <stdexcept>
#include <string>

namespace bglosa {

// Error categories, aligned with the CLI exit-code contract:
// config -> 1, infeasible -> 2, data -> 3.
enum class ErrorKind { config, infeasible, data };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string msg)
      : std::runtime_error(std::move(msg)), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error config_error(std::string msg) {
  return Error(ErrorKind::config, std::move(msg));
}

inline Error data_error(std::string msg) {
  return Error(ErrorKind::data, std::move(msg));
}

// No green instant is reachable. Carries the feasible arrival window so a
// caller can retry with a later cycle or emit "no advice".
class InfeasiblePlanError : public Error {
 public:
  InfeasiblePlanError(std::string msg, double t_min_arr, double t_max_arr)
      : Error(ErrorKind::infeasible, std::move(msg)),
        t_min_arr_(t_min_arr),
        t_max_arr_(t_max_arr) {}

  double arrival_window_begin() const noexcept { return t_min_arr_; }
  double arrival_window_end() const noexcept { return t_max_arr_; }

 private:
  double t_min_arr_;
  double t_max_arr_;
};

}  // namespace bglosa
