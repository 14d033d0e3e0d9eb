#include "tchebi/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

#include "tchebi/approx.hpp"
#include "tchebi/dtt.hpp"
#include "tchebi/io.hpp"
#include "tchebi/metrics.hpp"

namespace tchebi {

namespace {

constexpr double kQuietNan = std::numeric_limits<double>::quiet_NaN();

void evaluate_metrics(Candidate& c, double corr) {
    try {
        const Mat dense = make_scaled_approximation(c.matrix).dense();
        c.coding_gain_db = coding_gain(dense, corr);
        c.transform_efficiency = transform_efficiency(dense, corr);
    } catch (const std::domain_error&) {
        c.coding_gain_db = kQuietNan;
        c.transform_efficiency = kQuietNan;
    }
}

// Exact alpha values where some entry of round(alpha * D * T) changes, as
// reduced fractions (m + 1/2) / |entry|. Entries of D*T are the integer
// polynomial values divided by their row maximum, so boundaries are rational.
std::vector<double> rounding_boundaries(int size) {
    const Mat basis = tchebichef_basis(size);
    std::set<std::pair<long long, long long>> fractions;
    for (int k = 0; k < size; ++k) {
        long long row_max = 0;
        for (int n = 0; n < size; ++n)
            row_max = std::max(row_max, static_cast<long long>(std::llround(std::abs(basis(k, n)))));
        for (int n = 0; n < size; ++n) {
            const long long p = std::llround(std::abs(basis(k, n)));
            if (p == 0) continue;
            for (long long m = 0;; ++m) {
                // alpha = (2m+1) * row_max / (2p)
                long long num = (2 * m + 1) * row_max;
                long long den = 2 * p;
                if (static_cast<double>(num) / den >= 2.5) break;
                const long long g = std::gcd(num, den);
                fractions.emplace(num / g, den / g);
            }
        }
    }
    std::vector<double> out;
    out.reserve(fractions.size());
    for (const auto& [num, den] : fractions) out.push_back(static_cast<double>(num) / den);
    std::sort(out.begin(), out.end());
    return out;
}

struct ExactRegion {
    double low;
    double high;
    IMat matrix;   // empty when degenerate
    bool degenerate;
};

std::vector<ExactRegion> exact_regions(int size) {
    const std::vector<double> bounds = rounding_boundaries(size);
    std::vector<double> edges;
    edges.push_back(0.0);
    edges.insert(edges.end(), bounds.begin(), bounds.end());
    edges.push_back(2.5);
    std::vector<ExactRegion> regions;
    for (size_t i = 0; i + 1 < edges.size(); ++i) {
        const double mid = (edges[i] + edges[i + 1]) / 2.0;
        if (!(mid > 0.0 && mid < 2.5)) continue;
        IMat m = parametric_matrix(size, mid);
        const bool degenerate = has_zero_row(m);
        if (!regions.empty() && regions.back().degenerate == degenerate &&
            (degenerate || regions.back().matrix == m)) {
            regions.back().high = edges[i + 1];
        } else {
            regions.push_back(ExactRegion{edges[i], edges[i + 1], std::move(m), degenerate});
        }
    }
    return regions;
}

}  // namespace

SearchResult enumerate_candidates(int size, double alpha_min, double alpha_max, double step,
                                  bool refine_exact, double corr) {
    if (step <= 0.0) throw std::domain_error("enumerate_candidates: step must be positive");
    if (!(alpha_min > 0.0 && alpha_min < alpha_max && alpha_max < 2.5))
        throw std::domain_error("enumerate_candidates: need 0 < alpha_min < alpha_max < 5/2");
    const long long points = static_cast<long long>(std::floor((alpha_max - alpha_min) / step + 1e-9)) + 1;
    if (points <= 0) throw std::domain_error("enumerate_candidates: empty grid");

    SearchResult result;
    result.size = size;
    result.step = step;

    bool open = false;
    for (long long i = 0; i < points; ++i) {
        const double alpha = alpha_min + static_cast<double>(i) * step;
        IMat m = parametric_matrix(size, alpha);
        if (has_zero_row(m)) {
            open = false;
            continue;
        }
        if (open && result.candidates.back().matrix == m) {
            result.candidates.back().alpha_high = alpha;
        } else {
            Candidate c;
            c.matrix = std::move(m);
            c.alpha_low = c.alpha_high = alpha;
            result.candidates.push_back(std::move(c));
            open = true;
        }
    }

    for (Candidate& c : result.candidates) {
        c.exact_low = c.alpha_low;
        c.exact_high = c.alpha_high;
        c.contains_alpha2 = c.alpha_low - 1e-12 <= 2.0 && 2.0 <= c.alpha_high + 1e-12;
        evaluate_metrics(c, corr);
    }

    if (refine_exact) {
        const std::vector<ExactRegion> regions = exact_regions(size);
        for (Candidate& c : result.candidates) {
            const double mid = (c.alpha_low + c.alpha_high) / 2.0;
            for (const ExactRegion& r : regions) {
                if (r.low <= mid && mid < r.high && !r.degenerate) {
                    c.exact_low = r.low;
                    c.exact_high = r.high;
                    break;
                }
            }
        }
    }

    // Dominance over the finished set.
    for (Candidate& c : result.candidates) {
        c.dominated = false;
        if (std::isnan(c.coding_gain_db)) {
            c.dominated = true;
            continue;
        }
        for (const Candidate& o : result.candidates) {
            if (&o == &c || std::isnan(o.coding_gain_db)) continue;
            const bool geq = o.coding_gain_db >= c.coding_gain_db &&
                             o.transform_efficiency >= c.transform_efficiency;
            const bool gt = o.coding_gain_db > c.coding_gain_db ||
                            o.transform_efficiency > c.transform_efficiency;
            if (geq && gt) {
                c.dominated = true;
                break;
            }
        }
    }
    return result;
}

std::vector<Candidate> pareto_select(const std::vector<Candidate>& candidates) {
    if (candidates.empty()) throw std::domain_error("pareto_select: empty candidate list");
    std::vector<Candidate> front;
    for (const Candidate& c : candidates) {
        if (std::isnan(c.coding_gain_db)) continue;
        bool dominated = false;
        for (const Candidate& o : candidates) {
            if (&o == &c || std::isnan(o.coding_gain_db)) continue;
            const bool geq = o.coding_gain_db >= c.coding_gain_db &&
                             o.transform_efficiency >= c.transform_efficiency;
            const bool gt = o.coding_gain_db > c.coding_gain_db ||
                            o.transform_efficiency > c.transform_efficiency;
            if (geq && gt) {
                dominated = true;
                break;
            }
        }
        if (!dominated) front.push_back(c);
    }
    std::stable_sort(front.begin(), front.end(), [](const Candidate& a, const Candidate& b) {
        return a.coding_gain_db > b.coding_gain_db;
    });
    return front;
}

namespace {

std::string matrix_json_field(const IMat& m) { return "\"" + to_json(m) + "\""; }

std::string candidate_json(const Candidate& c, int precision) {
    std::string out = "{";
    out += "\"alpha_low\":" + format_double(c.alpha_low, precision);
    out += ",\"alpha_high\":" + format_double(c.alpha_high, precision);
    out += ",\"exact_low\":" + format_double(c.exact_low, precision);
    out += ",\"exact_high\":" + format_double(c.exact_high, precision);
    out += ",\"coding_gain_db\":" + format_double(c.coding_gain_db, precision);
    out += ",\"transform_efficiency\":" + format_double(c.transform_efficiency, precision);
    out += ",\"contains_alpha2\":" + std::string(c.contains_alpha2 ? "true" : "false");
    out += ",\"matrix\":" + to_json(c.matrix);
    out += "}";
    return out;
}

}  // namespace

std::string search_csv(const SearchResult& result, int precision) {
    std::string out = "alpha_low,alpha_high,coding_gain_db,transform_efficiency,dominated,matrix\n";
    for (const Candidate& c : result.candidates) {
        out += format_double(c.alpha_low, precision);
        out += ',';
        out += format_double(c.alpha_high, precision);
        out += ',';
        out += format_double(c.coding_gain_db, precision);
        out += ',';
        out += format_double(c.transform_efficiency, precision);
        out += ',';
        out += c.dominated ? "true" : "false";
        out += ',';
        out += matrix_json_field(c.matrix);
        out += '\n';
    }
    return out;
}

std::string pareto_front_json(const SearchResult& result, int precision) {
    const std::vector<Candidate> front =
        result.candidates.empty() ? std::vector<Candidate>{} : pareto_select(result.candidates);
    std::string out = "{";
    out += "\"n\":" + std::to_string(result.size);
    out += ",\"step\":" + format_double(result.step, precision);
    out += ",\"front\":[";
    for (size_t i = 0; i < front.size(); ++i) {
        if (i) out += ',';
        out += candidate_json(front[i], precision);
    }
    out += "]}";
    return out;
}

}  // namespace tchebi
