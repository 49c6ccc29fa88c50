#pragma once

// CSV ingestion and export. Fixed locale: ',' separator, '.' decimal point,
// UTF-8, LF line endings (a trailing CR is tolerated on read). No quoting.
//
//   raw:         subject,pair,experiment,target,exemplar,rating
//   aggregated:  exemplar,muA,muB,muAp,muBp,muAB,muABp,muApB,muApBp
//   deviations:  pair,exemplar,IA,IB,IAp,IBp,IABApBp
//
// The aggregated and deviations readers also accept the header with or
// without the leading `pair` column.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "fockbench/classicality.hpp"
#include "fockbench/domain.hpp"

namespace fockbench {

class ParseError : public Error {
public:
    ParseError(std::string source, std::size_t line, std::size_t column, const std::string& msg);

    const std::string& source() const noexcept { return source_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::string source_;
    std::size_t line_;
    std::size_t column_;
};

struct LabeledDeviation {
    std::string pair_id;
    std::string exemplar_id;
    DeviationVector I;
};

std::vector<RawResponse> read_raw_csv(std::istream& in, std::string_view source = "<stream>");
Dataset read_aggregated_csv(std::istream& in, std::string_view source = "<stream>");
std::vector<LabeledDeviation> read_deviations_csv(std::istream& in,
                                                  std::string_view source = "<stream>");

std::vector<RawResponse> read_raw_csv(const std::filesystem::path& path);
Dataset read_aggregated_csv(const std::filesystem::path& path);
std::vector<LabeledDeviation> read_deviations_csv(const std::filesystem::path& path);

void write_raw_csv(std::ostream& out, const std::vector<RawResponse>& responses);
void write_aggregated_csv(std::ostream& out, const Dataset& dataset);
void write_deviations_csv(std::ostream& out, const std::vector<LabeledDeviation>& rows);

// Shortest decimal text that parses back to the same double.
std::string format_double(double v);

}  // namespace fockbench
