#pragma once

#include <stdexcept>
#include <string>

namespace wildarc {

/// Failure classes surfaced by the library. CLI exit codes group them:
/// numerical (2), config (3), domain (4), geometry (5).
enum class errc {
  origin_not_covered,
  north_pole,
  infeasible_spec,
  outside_tube,
  step_too_coarse,
  non_smooth_neighborhood,
  no_convergence,
  escaped_tube,
  depth_too_large,
  domain_escape,
  negative_genus,
  config_invalid,
  precondition,
};

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

/// CLI exit-code contract: 0 ok, 1 property failed, 2 numerical, 3 config,
/// 4 domain, 5 geometry.
inline int exit_code_for(errc code) {
  switch (code) {
    case errc::step_too_coarse:
    case errc::no_convergence:
      return 2;
    case errc::depth_too_large:
    case errc::config_invalid:
    case errc::negative_genus:
    case errc::precondition:
      return 3;
    case errc::domain_escape:
    case errc::origin_not_covered:
    case errc::north_pole:
      return 4;
    case errc::escaped_tube:
    case errc::outside_tube:
    case errc::infeasible_spec:
    case errc::non_smooth_neighborhood:
      return 5;
  }
  return 1;
}

}  // namespace wildarc
