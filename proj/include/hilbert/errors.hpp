#pragma once

#include <stdexcept>
#include <string>

namespace hilbert {

// Thrown when an iterative scheme exhausts its evaluation budget before
// reaching the requested tolerance.  Carries the best estimate so callers
// can degrade gracefully instead of losing the partial result.
class convergence_error : public std::runtime_error {
public:
    convergence_error(const std::string& what, double best_estimate,
                      double error_estimate, long evaluations)
        : std::runtime_error(what),
          best_(best_estimate),
          err_(error_estimate),
          evals_(evaluations) {}

    double best_estimate() const noexcept { return best_; }
    double error_estimate() const noexcept { return err_; }
    long evaluations() const noexcept { return evals_; }

private:
    double best_;
    double err_;
    long evals_;
};

}  // namespace hilbert
