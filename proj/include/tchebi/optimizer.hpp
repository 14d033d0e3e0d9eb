#pragma once

#include <string>
#include <vector>

#include "tchebi/matrix.hpp"

namespace tchebi {

// One region of the alpha axis on which the rounding outcome is constant.
struct Candidate {
    IMat matrix;
    double alpha_low = 0.0;    // first grid point producing this matrix
    double alpha_high = 0.0;   // last grid point producing this matrix
    double exact_low = 0.0;    // refined region bounds (== grid bounds unless refined)
    double exact_high = 0.0;
    double coding_gain_db = 0.0;        // NaN when the dense form is singular
    double transform_efficiency = 0.0;
    bool dominated = false;
    bool contains_alpha2 = false;
};

struct SearchResult {
    int size = 0;
    double step = 0.0;
    std::vector<Candidate> candidates;  // in ascending alpha order
};

// Walks the alpha grid [alpha_min, alpha_max] with the given step, merging
// consecutive grid points with identical matrices; zero-row (degenerate)
// matrices are skipped. Coding metrics are evaluated once per candidate on the
// dense scaled form. With refine_exact the region endpoints are additionally
// resolved analytically from the rounding boundaries.
SearchResult enumerate_candidates(int size, double alpha_min, double alpha_max, double step,
                                  bool refine_exact = false,
                                  double corr = 0.95);

// Non-dominated candidates under simultaneous (coding gain, efficiency)
// maximization, sorted by coding gain descending. Candidates with undefined
// metrics never enter the front.
std::vector<Candidate> pareto_select(const std::vector<Candidate>& candidates);

// CSV: alpha_low,alpha_high,coding_gain_db,transform_efficiency,dominated,matrix
// with the matrix JSON-encoded in a quoted field.
std::string search_csv(const SearchResult& result, int precision = 0);

// JSON summary of the Pareto front.
std::string pareto_front_json(const SearchResult& result, int precision = 0);

}  // namespace tchebi
