#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sentirank {

/// Neumaier-compensated accumulator. Aggregation contracts promise totals
/// that agree across arbitrary record splits to 1e-9; plain summation can
/// drift past that once corpora reach tens of thousands of records.
class CompensatedSum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// Renders a real with up to 6 significant digits, the convention for all
/// workspace TSVs. Deterministic for a given value.
std::string format_real(double v);

/// Strict parse of a complete field; rejects empty input and trailing bytes.
bool parse_real(std::string_view text, double& out);
bool parse_integer(std::string_view text, std::int64_t& out);

/// FNV-1a 64-bit content digests, hex encoded. Manifest staleness checks
/// only need change detection, not cryptographic strength.
std::string digest_bytes(std::string_view bytes);
std::string digest_file(const std::string& path);  // throws InputError if unreadable

std::vector<std::string_view> split_tabs(std::string_view line);
std::string_view trim(std::string_view s);
std::string lower_ascii(std::string_view s);

std::string read_file(const std::string& path);  // throws InputError if unreadable
void write_file(const std::string& path, std::string_view content);

}  // namespace sentirank
