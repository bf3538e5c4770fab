#ifndef MUSKAT_ERRORS_HPP
#define MUSKAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace muskat {

/// A Fourier symbol evaluated to a non-finite value on the grid.
class numeric_domain_error : public std::runtime_error {
  public:
    explicit numeric_domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// A quadrature did not converge within its panel budget.
class convergence_error : public std::runtime_error {
  public:
    explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

/// A weight's tail mass does not decrease to zero within the search budget.
class not_integrable_error : public std::runtime_error {
  public:
    explicit not_integrable_error(const std::string& what) : std::runtime_error(what) {}
};

/// A tabulated function was queried outside its tabulation range.
class table_range_error : public std::runtime_error {
  public:
    explicit table_range_error(const std::string& what) : std::runtime_error(what) {}
};

/// A time step produced non-finite values; carries the time of failure.
class step_failure : public std::runtime_error {
  public:
    step_failure(double t, const std::string& what)
        : std::runtime_error(what), time_of_failure(t) {}
    double time_of_failure;
};

}  // namespace muskat

#endif
