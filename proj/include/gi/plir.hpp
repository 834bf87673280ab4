#pragma once

#include <Eigen/Dense>

#include "gi/core.hpp"

// Projected Landweber iteration regularization. One update is
//
//   x_t = x_{t-1} + omega * pinv(A) * (y - A x_{t-1})
//
// followed by per-pixel clamping onto [0,1] (the projection; a flag
// disables it for property tests). pinv(A) is applied through a thin SVD
// of A, which equals pinv(A^T A) * A^T without ever forming the K x K
// Gram matrix.

namespace gi {

class PlirOperator {
public:
    PlirOperator(Eigen::MatrixXd a, Eigen::MatrixXd u, Eigen::VectorXd sigma,
                 Eigen::MatrixXd v, double omega);

    int measurement_count() const { return static_cast<int>(a_.rows()); }
    int pixel_count() const { return static_cast<int>(a_.cols()); }
    int rank() const { return static_cast<int>(sigma_.size()); }
    double omega() const { return omega_; }

    const Eigen::MatrixXd& matrix() const { return a_; }
    const Eigen::MatrixXd& u() const { return u_; }
    const Eigen::VectorXd& singular_values() const { return sigma_; }
    const Eigen::MatrixXd& v() const { return v_; }

    // A x for a flattened image x.
    std::vector<double> forward(const std::vector<double>& x) const;

    // pinv(A) r = V diag(1/sigma) U^T r.
    std::vector<double> pinv_apply(const std::vector<double>& r) const;

    // ||y - A x||_2
    double residual_norm(const std::vector<double>& x, const MeasurementVector& y) const;

private:
    Eigen::MatrixXd a_;
    Eigen::MatrixXd u_;
    Eigen::VectorXd sigma_;
    Eigen::MatrixXd v_;
    double omega_;
};

// Thin SVD of the flattened pattern stack; singular values at or below
// rank_cutoff * sigma_max are discarded. Throws NumericalError for an
// all-zero stack.
PlirOperator build_operator(const PatternStack& patterns, double omega,
                            double rank_cutoff);

// One regularized update from x_prev toward consistency with y.
std::vector<double> plir_step(const PlirOperator& op, const std::vector<double>& x_prev,
                              const MeasurementVector& y, bool clamp = true);

} // namespace gi
