#include "fockbench/csv.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace fockbench {

ParseError::ParseError(std::string source, std::size_t line, std::size_t column,
                       const std::string& msg)
    : Error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
      source_(std::move(source)),
      line_(line),
      column_(column) {}

std::string format_double(double v) {
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    (void)ec;
    return std::string(buf.data(), ptr);
}

namespace {

struct Field {
    std::string_view text;
    std::size_t column;  // 1-based character column
};

std::vector<Field> split_fields(std::string_view line) {
    std::vector<Field> out;
    std::size_t start = 0;
    while (true) {
        auto comma = line.find(',', start);
        auto end = comma == std::string_view::npos ? line.size() : comma;
        out.push_back({line.substr(start, end - start), start + 1});
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

class LineReader {
public:
    LineReader(std::istream& in, std::string_view source) : in_(in), source_(source) {}

    // Next non-empty line, CR stripped. False at end of input.
    bool next(std::string& line) {
        while (std::getline(in_, line)) {
            ++line_no_;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) return true;
        }
        return false;
    }

    std::size_t line_no() const { return line_no_; }

    [[noreturn]] void fail(std::size_t column, const std::string& msg) const {
        throw ParseError(source_, line_no_, column, msg);
    }

private:
    std::istream& in_;
    std::string source_;
    std::size_t line_no_ = 0;
};

double parse_double(const LineReader& rd, const Field& f) {
    double v = 0.0;
    const char* first = f.text.data();
    const char* last = first + f.text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || f.text.empty()) {
        rd.fail(f.column, "expected a number, got '" + std::string(f.text) + "'");
    }
    return v;
}

int parse_int(const LineReader& rd, const Field& f) {
    std::string_view t = f.text;
    if (!t.empty() && t.front() == '+') t.remove_prefix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
        rd.fail(f.column, "expected an integer rating, got '" + std::string(f.text) + "'");
    }
    return v;
}

// Returns true when the header carries a leading `pair` column.
bool expect_header(LineReader& rd, std::string_view expected_without_pair) {
    std::string line;
    if (!rd.next(line)) rd.fail(1, "empty input, expected header");
    if (line == expected_without_pair) return false;
    if (line == "pair," + std::string(expected_without_pair)) return true;
    rd.fail(1, "unexpected header '" + line + "', expected '" +
                   std::string(expected_without_pair) + "'");
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path.string() + "' for reading");
    return in;
}

}  // namespace

std::vector<RawResponse> read_raw_csv(std::istream& in, std::string_view source) {
    LineReader rd(in, source);
    std::string line;
    if (!rd.next(line)) rd.fail(1, "empty input, expected header");
    if (line != "subject,pair,experiment,target,exemplar,rating") {
        rd.fail(1, "unexpected header '" + line +
                       "', expected 'subject,pair,experiment,target,exemplar,rating'");
    }
    std::vector<RawResponse> out;
    while (rd.next(line)) {
        auto f = split_fields(line);
        if (f.size() != 6) {
            rd.fail(1, "expected 6 fields, found " + std::to_string(f.size()));
        }
        auto experiment = parse_experiment(f[2].text);
        if (!experiment) {
            rd.fail(f[2].column, "unknown experiment '" + std::string(f[2].text) +
                                     "' (expected AB, ABn, AnB or AnBn)");
        }
        auto target = parse_target(f[3].text);
        if (!target) {
            rd.fail(f[3].column,
                    "unknown target '" + std::string(f[3].text) + "' (expected X, Y or XY)");
        }
        int value = parse_int(rd, f[5]);
        if (value < -3 || value > 3) {
            rd.fail(f[5].column, "rating " + std::to_string(value) + " is outside -3..3");
        }
        out.push_back(RawResponse{std::string(f[0].text), std::string(f[1].text), *experiment,
                                  *target, std::string(f[4].text), Rating(value)});
    }
    return out;
}

Dataset read_aggregated_csv(std::istream& in, std::string_view source) {
    LineReader rd(in, source);
    const bool with_pair =
        expect_header(rd, "exemplar,muA,muB,muAp,muBp,muAB,muABp,muApB,muApBp");
    const std::size_t offset = with_pair ? 1 : 0;
    Dataset out;
    std::string line;
    while (rd.next(line)) {
        auto f = split_fields(line);
        if (f.size() != 9 + offset) {
            rd.fail(1, "expected " + std::to_string(9 + offset) + " fields, found " +
                           std::to_string(f.size()));
        }
        MembershipRecord r;
        if (with_pair) r.pair_id = std::string(f[0].text);
        r.exemplar_id = std::string(f[offset].text);
        std::array<double*, 8> slots{&r.mu_A,     &r.mu_B,      &r.mu_Ap,     &r.mu_Bp,
                                     &r.mu_AandB, &r.mu_AandBp, &r.mu_ApandB, &r.mu_ApandBp};
        for (std::size_t i = 0; i < 8; ++i) {
            const auto& field = f[offset + 1 + i];
            double v = parse_double(rd, field);
            if (!(v >= 0.0 && v <= 1.0)) {
                rd.fail(field.column, "membership weight " + std::string(field.text) +
                                          " is outside [0,1]");
            }
            *slots[i] = v;
        }
        for (const auto& prev : out.records) {
            if (prev.exemplar_id == r.exemplar_id && prev.pair_id == r.pair_id) {
                rd.fail(f[offset].column, "duplicate exemplar '" + r.exemplar_id + "'");
            }
        }
        out.records.push_back(std::move(r));
    }
    return out;
}

std::vector<LabeledDeviation> read_deviations_csv(std::istream& in, std::string_view source) {
    LineReader rd(in, source);
    const bool with_pair = expect_header(rd, "exemplar,IA,IB,IAp,IBp,IABApBp");
    const std::size_t offset = with_pair ? 1 : 0;
    std::vector<LabeledDeviation> out;
    std::string line;
    while (rd.next(line)) {
        auto f = split_fields(line);
        if (f.size() != 6 + offset) {
            rd.fail(1, "expected " + std::to_string(6 + offset) + " fields, found " +
                           std::to_string(f.size()));
        }
        LabeledDeviation row;
        if (with_pair) row.pair_id = std::string(f[0].text);
        row.exemplar_id = std::string(f[offset].text);
        std::array<double*, 5> slots{&row.I.I_A, &row.I.I_B, &row.I.I_Ap, &row.I.I_Bp,
                                     &row.I.I_ABApBp};
        for (std::size_t i = 0; i < 5; ++i) {
            const auto& field = f[offset + 1 + i];
            double v = parse_double(rd, field);
            if (!(v >= -3.0 && v <= 1.0)) {
                rd.fail(field.column,
                        "deviation value " + std::string(field.text) + " is outside [-3,1]");
            }
            *slots[i] = v;
        }
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<RawResponse> read_raw_csv(const std::filesystem::path& path) {
    auto in = open_or_throw(path);
    return read_raw_csv(in, path.string());
}

Dataset read_aggregated_csv(const std::filesystem::path& path) {
    auto in = open_or_throw(path);
    return read_aggregated_csv(in, path.string());
}

std::vector<LabeledDeviation> read_deviations_csv(const std::filesystem::path& path) {
    auto in = open_or_throw(path);
    return read_deviations_csv(in, path.string());
}

void write_raw_csv(std::ostream& out, const std::vector<RawResponse>& responses) {
    out << "subject,pair,experiment,target,exemplar,rating\n";
    for (const auto& r : responses) {
        out << r.subject_id << ',' << r.pair_id << ',' << to_string(r.experiment) << ','
            << to_string(r.target) << ',' << r.exemplar_id << ',' << r.rating.value() << '\n';
    }
}

void write_aggregated_csv(std::ostream& out, const Dataset& dataset) {
    const bool with_pair = std::any_of(dataset.records.begin(), dataset.records.end(),
                                       [](const auto& r) { return !r.pair_id.empty(); });
    if (with_pair) out << "pair,";
    out << "exemplar,muA,muB,muAp,muBp,muAB,muABp,muApB,muApBp\n";
    for (const auto& r : dataset.records) {
        if (with_pair) out << r.pair_id << ',';
        out << r.exemplar_id;
        for (double w : r.weights()) out << ',' << format_double(w);
        out << '\n';
    }
}

void write_deviations_csv(std::ostream& out, const std::vector<LabeledDeviation>& rows) {
    out << "pair,exemplar,IA,IB,IAp,IBp,IABApBp\n";
    for (const auto& row : rows) {
        out << row.pair_id << ',' << row.exemplar_id;
        for (double v : row.I.as_array()) out << ',' << format_double(v);
        out << '\n';
    }
}

}  // namespace fockbench
