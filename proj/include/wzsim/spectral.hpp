// SPDX-License-Identifier: Apache-2.0
//
// Sine-spectral representation of functions on (0,1) with homogeneous
// Dirichlet boundary conditions. Basis: e_k(x) = sqrt(2) sin(k pi x),
// eigenfunctions of -d^2/dx^2 with eigenvalues lambda_k = (k pi)^2.

#pragma once

#include <cstdint>
#include <vector>

namespace wz {

// Coefficients c_1..c_n over the orthonormal sine basis.
struct SpectralField {
    std::vector<double> coeffs;

    SpectralField() = default;
    explicit SpectralField(int n_modes) : coeffs(n_modes, 0.0) {}
    explicit SpectralField(std::vector<double> c) : coeffs(std::move(c)) {}

    int n_modes() const { return static_cast<int>(coeffs.size()); }
    bool all_finite() const;
};

// Function values at the interior nodes x_g = g/(G+1), g = 1..G.
// Boundary values are identically zero and never stored.
struct GridField {
    std::vector<double> values;

    GridField() = default;
    explicit GridField(int grid_size) : values(grid_size, 0.0) {}
    explicit GridField(std::vector<double> v) : values(std::move(v)) {}

    int size() const { return static_cast<int>(values.size()); }
    bool all_finite() const;
};

// lambda_j = (j pi)^2, j >= 1. Throws std::invalid_argument for j < 1.
double eigenvalue(int j);

// Evaluate the sine expansion at the G interior nodes. Requires G >= n_modes
// (fewer nodes than modes would alias). Fast transform backed by FFTW.
GridField to_grid(const SpectralField& field, int grid_size);

// Recover the first n coefficients from grid values. Requires n <= G.
// Exact inverse of to_grid for band-limited data (round trip is identity
// up to rounding).
SpectralField to_spectral(const GridField& grid, int n_modes);

// Direct O(n*G) summation transforms. Reference path: kept independent of
// the FFT route so either can check the other.
GridField to_grid_direct(const SpectralField& field, int grid_size);
SpectralField to_spectral_direct(const GridField& grid, int n_modes);

// Heat semigroup: c_k -> exp(-lambda_k t) c_k, t >= 0.
SpectralField semigroup_apply(const SpectralField& field, double t);

// Composite rectangle rule on the interior nodes with weight 1/(G+1):
// ( sum_g |v_g|^p / (G+1) )^(1/p), p >= 1. Exact for p=2 on band-limited
// fields by discrete orthogonality; O(1/G) accurate otherwise.
double lp_norm(const GridField& grid, double p);

// max_g |v_g| (discrete sup norm over the interior nodes).
double sup_norm(const GridField& grid);

// Smallest G of the form 2^l - 1 with G >= 4*n_modes. Oversampling factor 4
// keeps the cubic nonlinearity alias-free at n modes.
int dealiased_grid_size(int n_modes);

}  // namespace wz
