#pragma once

// Experiment drivers reproducing each theorem numerically, with CSV
// reporting and deterministic seeding.

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "horopal/constructions.hpp"

namespace horopal {

struct ExperimentReport {
    struct Assertion {
        std::string name;
        bool pass = false;
        std::string detail;
        std::string witness;  // reproduction data, printed when the assertion fails
    };

    std::string id;
    uint64_t seed = 0;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<Assertion> assertions;
    int rejected_draws = 0;

    bool all_pass() const;
    void require(const std::string& name, bool pass, const std::string& detail = "",
                 const std::string& witness = "");
    void write_csv(std::ostream& out) const;
    void print_summary(std::ostream& out) const;
};

// per-trial RNG stream derived from (seed, trial index)
std::mt19937_64 rng_for_trial(uint64_t seed, uint64_t trial);

// point drawn uniformly w.r.t. hyperbolic area from B(o, R)
HPoint sample_point_in_ball(std::mt19937_64& g, double R);

// random h-convex body: hull of n points uniform in B(o, R); degenerate
// draws are rejected and counted
HConvexBody random_hconvex_body(std::mt19937_64& g, int n_points, double R, int& rejected);

// Hausdorff distance to the best-aligned copy of T (incircle centers matched,
// then one rotation angle optimized by coarse scan plus golden section)
double hausdorff_to_triangle(const std::vector<Arc>& boundary, BallSpec incircle,
                             const RegularHorocyclicTriangle& T, double resolution = 2e-3);

ExperimentReport exp_nopal(const std::vector<double>& r_list);
ExperimentReport exp_steinhagen(int trials, int n_points, uint64_t seed);
ExperimentReport exp_pal(int trials, int n_points, uint64_t seed);
ExperimentReport exp_monotone(double w, int grid_size);
ExperimentReport exp_stability(double w, const std::vector<double>& eps_list, uint64_t seed);

}  // namespace horopal
