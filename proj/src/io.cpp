#include "tchebi/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>

namespace tchebi {

std::string format_double(double v, int precision) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (precision > 0) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.*g", precision, v);
        return buf;
    }
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

namespace {

template <typename M, typename F>
std::string rows_to_csv(const M& m, F&& fmt) {
    std::string out;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out += ',';
            out += fmt(m(i, j));
        }
        out += '\n';
    }
    return out;
}

template <typename M, typename F>
std::string rows_to_json(const M& m, F&& fmt) {
    std::string out = "[";
    for (int i = 0; i < m.rows(); ++i) {
        out += i ? ",[" : "[";
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out += ',';
            out += fmt(m(i, j));
        }
        out += ']';
    }
    out += ']';
    return out;
}

}  // namespace

std::string to_csv(const Mat& m, int precision) {
    return rows_to_csv(m, [&](double v) { return format_double(v, precision); });
}

std::string to_csv(const IMat& m) {
    return rows_to_csv(m, [](int v) { return std::to_string(v); });
}

std::string to_json(const Mat& m, int precision) {
    return rows_to_json(m, [&](double v) { return format_double(v, precision); });
}

std::string to_json(const IMat& m) {
    return rows_to_json(m, [](int v) { return std::to_string(v); });
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace tchebi
