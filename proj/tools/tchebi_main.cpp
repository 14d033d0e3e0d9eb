#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tchebi/approx.hpp"
#include "tchebi/codec.hpp"
#include "tchebi/dtt.hpp"
#include "tchebi/image.hpp"
#include "tchebi/io.hpp"
#include "tchebi/metrics.hpp"
#include "tchebi/optimizer.hpp"
#include "tchebi/threading.hpp"
#include "tchebi/transform.hpp"

namespace {

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::fwrite(content.data(), 1, content.size(), stdout);
        if (!content.empty() && content.back() != '\n') std::fputc('\n', stdout);
    } else {
        tchebi::write_file(out_path, content);
    }
}

std::vector<int> parse_qf_range(const std::string& text) {
    // Either a single QF or lo:hi:step.
    auto to_int = [&](const std::string& part) {
        try {
            size_t used = 0;
            const int v = std::stoi(part, &used);
            if (used != part.size()) throw std::invalid_argument(part);
            return v;
        } catch (const std::exception&) {
            throw std::runtime_error("bad --qf value '" + text + "', expected QF or lo:hi:step");
        }
    };
    std::vector<int> qfs;
    const size_t c1 = text.find(':');
    if (c1 == std::string::npos) {
        qfs.push_back(to_int(text));
        return qfs;
    }
    const size_t c2 = text.find(':', c1 + 1);
    if (c2 == std::string::npos)
        throw std::runtime_error("bad --qf value '" + text + "', expected QF or lo:hi:step");
    const int lo = to_int(text.substr(0, c1));
    const int hi = to_int(text.substr(c1 + 1, c2 - c1 - 1));
    const int step = to_int(text.substr(c2 + 1));
    if (step <= 0 || lo > hi)
        throw std::runtime_error("bad --qf range '" + text + "'");
    for (int q = lo; q <= hi; q += step) qfs.push_back(q);
    return qfs;
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> parts;
    size_t start = 0;
    while (start <= s.size()) {
        const size_t comma = s.find(',', start);
        if (comma == std::string::npos) {
            parts.push_back(s.substr(start));
            break;
        }
        parts.push_back(s.substr(start, comma - start));
        start = comma + 1;
    }
    return parts;
}

std::string matrix_output(const std::string& kind, int n, double alpha, const std::string& format,
                          int precision) {
    using namespace tchebi;
    if (kind == "exact-dtt" || kind == "exact-dct") {
        const Mat m = kind == "exact-dtt" ? dtt_matrix(n) : dct_matrix(n);
        if (format == "csv") return to_csv(m, precision);
        return "{\"kind\":\"" + kind + "\",\"n\":" + std::to_string(n) +
               ",\"entries\":" + to_json(m, precision) + "}";
    }
    if (kind == "low-complexity") {
        const IMat m = parametric_matrix(n, alpha);
        if (format == "csv") return to_csv(m);
        return "{\"kind\":\"low-complexity\",\"n\":" + std::to_string(n) +
               ",\"alpha\":" + format_double(alpha, precision) + ",\"entries\":" + to_json(m) + "}";
    }
    if (kind == "approx") {
        const ScaledApproximation a = make_scaled_approximation(parametric_matrix(n, alpha));
        if (format == "csv") return to_csv(a.dense(), precision);
        std::string scaling = "[";
        for (int i = 0; i < a.size(); ++i) {
            if (i) scaling += ',';
            scaling += format_double(a.scaling[i], precision);
        }
        scaling += ']';
        return "{\"kind\":\"approx\",\"n\":" + std::to_string(n) +
               ",\"alpha\":" + format_double(alpha, precision) + ",\"scaling\":" + scaling +
               ",\"core\":" + to_json(a.core) + "}";
    }
    throw std::domain_error("unknown matrix kind: " + kind);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Discrete Tchebichef transform toolkit: exact matrices, low-complexity "
                 "approximations, coding metrics, and a JPEG-like evaluation harness"};
    app.require_subcommand(1);
    app.fallthrough();
    int precision = 0;
    app.add_option("--precision", precision, "Significant digits for numeric output (default: full)");

    // matrix
    auto* matrix_cmd = app.add_subcommand("matrix", "Print a transform matrix");
    int m_n = 8;
    double m_alpha = 2.0;
    std::string m_kind = "exact-dtt", m_format = "json", m_out;
    matrix_cmd->add_option("--n", m_n, "Transform size")->required();
    matrix_cmd->add_option("--kind", m_kind, "exact-dtt | exact-dct | low-complexity | approx")
        ->check(CLI::IsMember({"exact-dtt", "exact-dct", "low-complexity", "approx"}));
    matrix_cmd->add_option("--alpha", m_alpha, "Rounding parameter for the approximate kinds");
    matrix_cmd->add_option("--format", m_format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    matrix_cmd->add_option("--out", m_out, "Write to file instead of stdout");

    // search
    auto* search_cmd = app.add_subcommand("search", "Exhaustive alpha search with Pareto summary");
    int s_n = 8;
    double s_step = 0.001, s_min = 0.001, s_max = 2.499;
    bool s_refine = false;
    std::string s_out, s_front;
    search_cmd->add_option("--n", s_n, "Transform size (4 or 8)")->required();
    search_cmd->add_option("--step", s_step, "Grid step");
    search_cmd->add_option("--min", s_min, "Lower grid bound");
    search_cmd->add_option("--max", s_max, "Upper grid bound");
    search_cmd->add_flag("--refine-exact", s_refine, "Resolve exact rational interval endpoints");
    search_cmd->add_option("--out", s_out, "Candidate CSV output path (default stdout)");
    search_cmd->add_option("--front", s_front, "Pareto front JSON output path");

    // metrics
    auto* metrics_cmd = app.add_subcommand("metrics", "Coding and proximity metrics report");
    int mt_n = 8;
    double mt_rho = tchebi::kDefaultMarkovCorrelation;
    std::string mt_kind = "approx", mt_out;
    metrics_cmd->add_option("--kind", mt_kind, "exact-dtt | exact-dct | approx")
        ->check(CLI::IsMember({"exact-dtt", "exact-dct", "approx"}));
    metrics_cmd->add_option("--n", mt_n, "Transform size");
    metrics_cmd->add_option("--rho", mt_rho, "Markov source correlation");
    metrics_cmd->add_option("--out", mt_out, "Write to file instead of stdout");

    // compress
    auto* compress_cmd = app.add_subcommand("compress", "Round-trip one image through the codec");
    std::string c_input, c_output, c_report, c_transform = "exact-dtt8";
    int c_qf = 50, c_threads = 0;
    compress_cmd->add_option("--input", c_input, "Input PGM (P5)")->required();
    compress_cmd->add_option("--qf", c_qf, "Quality factor 1..99");
    compress_cmd->add_option("--transform", c_transform, "exact-dtt8 | approx-dtt8 | exact-dct8")
        ->check(CLI::IsMember({"exact-dtt8", "approx-dtt8", "exact-dct8"}));
    compress_cmd->add_option("--output", c_output, "Reconstructed PGM path")->required();
    compress_cmd->add_option("--report", c_report, "Per-image JSON report path");
    compress_cmd->add_option("--threads", c_threads, "Worker threads (default: all cores)");

    // curve
    auto* curve_cmd = app.add_subcommand("curve", "Quality curve over a QF sweep");
    std::string cu_dir, cu_qf = "10:90:5", cu_transforms = "exact-dtt8,approx-dtt8", cu_out;
    int cu_threads = 0;
    curve_cmd->add_option("--input-dir", cu_dir, "Directory of PGM images")->required();
    curve_cmd->add_option("--qf", cu_qf, "QF or lo:hi:step sweep");
    curve_cmd->add_option("--transforms", cu_transforms, "Comma-separated transform ids");
    curve_cmd->add_option("--out", cu_out, "CSV output path (default stdout)");
    curve_cmd->add_option("--threads", cu_threads, "Worker threads (default: all cores)");

    // opcount
    auto* opcount_cmd = app.add_subcommand("opcount", "Arithmetic cost of the 8-point kernels");
    std::string o_alg = "fast8", o_out;
    opcount_cmd->add_option("--algorithm", o_alg, "fast8 | direct8")
        ->check(CLI::IsMember({"fast8", "direct8"}));
    opcount_cmd->add_option("--out", o_out, "Write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Usage problems exit 2; --help and friends keep their zero status.
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*matrix_cmd) {
            emit(matrix_output(m_kind, m_n, m_alpha, m_format, precision), m_out);
        } else if (*search_cmd) {
            const tchebi::SearchResult result =
                tchebi::enumerate_candidates(s_n, s_min, s_max, s_step, s_refine);
            emit(tchebi::search_csv(result, precision), s_out);
            if (!s_front.empty())
                tchebi::write_file(s_front, tchebi::pareto_front_json(result, precision));
        } else if (*metrics_cmd) {
            const tchebi::MetricsReport r = tchebi::metrics_report(mt_kind, mt_n, mt_rho);
            emit(tchebi::metrics_report_json(r, precision), mt_out);
        } else if (*compress_cmd) {
            const tchebi::GrayImage img = tchebi::read_pgm(c_input);
            const tchebi::BlockTransform t = tchebi::block_transform(c_transform);
            const int threads = tchebi::resolve_threads(c_threads);
            const auto [rec, report] = tchebi::compress_image(img, c_qf, t, threads);
            tchebi::write_pgm(c_output, rec);
            if (!c_report.empty())
                tchebi::write_file(c_report, tchebi::compression_report_json(report, precision));
        } else if (*curve_cmd) {
            std::vector<std::string> names;
            for (const auto& entry : std::filesystem::directory_iterator(cu_dir))
                if (entry.is_regular_file() && entry.path().extension() == ".pgm")
                    names.push_back(entry.path().string());
            std::sort(names.begin(), names.end());
            if (names.empty()) throw std::runtime_error("no .pgm files in " + cu_dir);
            std::vector<tchebi::GrayImage> corpus;
            corpus.reserve(names.size());
            for (const std::string& p : names) corpus.push_back(tchebi::read_pgm(p));
            const auto points =
                tchebi::quality_curve(corpus, parse_qf_range(cu_qf), split_list(cu_transforms),
                                      tchebi::resolve_threads(cu_threads));
            emit(tchebi::curve_csv(points, precision), cu_out);
        } else if (*opcount_cmd) {
            tchebi::OperationCounts c;
            if (o_alg == "fast8") {
                c = tchebi::count_operations(tchebi::fast_algorithm_8());
            } else {
                c = tchebi::count_matrix_operations(tchebi::raw_parametric_matrix(8, 2.0));
            }
            std::string json = "{\"additions\":" + std::to_string(c.additions) +
                               ",\"shifts\":" + std::to_string(c.shifts) +
                               ",\"multiplications\":" + std::to_string(c.multiplications) +
                               ",\"total\":" + std::to_string(c.total()) + "}";
            emit(json, o_out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
