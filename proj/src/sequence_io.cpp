#include "cfbfhs/sequence_io.hpp"

#include "cfbfhs/error.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <system_error>

namespace cfbfhs {

namespace {

struct Line {
    std::string_view text;
    std::size_t number;
};

std::vector<Line> split_lines(std::string_view text)
{
    std::vector<Line> lines;
    std::size_t number = 1;
    while (!text.empty()) {
        const auto end = text.find('\n');
        std::string_view line = text.substr(0, end);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back({line, number++});
        if (end == std::string_view::npos) break;
        text.remove_prefix(end + 1);
    }
    return lines;
}

std::optional<std::uint64_t> parse_unsigned(std::string_view token)
{
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) return std::nullopt;
    return value;
}

std::uint32_t smallest_prime_factor(std::uint64_t value)
{
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= value; ++d) {
        if (value % d == 0) return d;
    }
    return static_cast<std::uint32_t>(value);
}

struct Header {
    std::uint64_t spots = 0;
    std::uint64_t length = 0;
    std::uint64_t q = 0;
    SetKind kind = SetKind::base;
};

Header parse_header(const Line& line, const std::string& source)
{
    constexpr std::string_view prefix = "# ";
    if (line.text.substr(0, prefix.size()) != prefix) {
        throw ParseError(source, line.number, 1, "expected header '# M=<M> n=<n'> q=<q> kind=<base|balanced>'");
    }
    Header header;
    bool seen[4] = {false, false, false, false};
    std::size_t pos = prefix.size();
    while (pos < line.text.size()) {
        if (line.text[pos] == ' ') {
            ++pos;
            continue;
        }
        const std::size_t end = std::min(line.text.find(' ', pos), line.text.size());
        const std::string_view token = line.text.substr(pos, end - pos);
        const std::size_t column = pos + 1;
        const auto eq = token.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError(source, line.number, column, "header field '" + std::string(token) + "' lacks '='");
        }
        const std::string_view key = token.substr(0, eq);
        const std::string_view value = token.substr(eq + 1);
        const std::size_t value_column = column + eq + 1;
        if (key == "kind") {
            if (value == "base") {
                header.kind = SetKind::base;
            } else if (value == "balanced") {
                header.kind = SetKind::balanced;
            } else {
                throw ParseError(source, line.number, value_column, "kind must be 'base' or 'balanced'");
            }
            seen[3] = true;
        } else {
            const auto number = parse_unsigned(value);
            if (!number || *number == 0) {
                throw ParseError(source, line.number, value_column,
                                 "header field '" + std::string(key) + "' needs a positive integer");
            }
            if (key == "M") {
                header.spots = *number;
                seen[0] = true;
            } else if (key == "n") {
                header.length = *number;
                seen[1] = true;
            } else if (key == "q") {
                header.q = *number;
                seen[2] = true;
            } else {
                throw ParseError(source, line.number, column, "unknown header field '" + std::string(key) + "'");
            }
        }
        pos = end;
    }
    constexpr const char* names[4] = {"M", "n", "q", "kind"};
    for (int k = 0; k < 4; ++k) {
        if (!seen[k]) {
            throw ParseError(source, line.number, line.text.size() + 1,
                             std::string("header is missing field '") + names[k] + "'");
        }
    }
    return header;
}

std::string join_counts(std::size_t index, std::span<const std::size_t> row)
{
    std::string out = std::to_string(index);
    for (auto c : row) {
        out += ',';
        out += std::to_string(c);
    }
    out += '\n';
    return out;
}

std::string spot_header(std::size_t spots)
{
    std::string out = "seq_index";
    for (std::size_t f = 0; f < spots; ++f) out += ",f_" + std::to_string(f);
    out += '\n';
    return out;
}

} // namespace

std::string format_sequence_set(const SequenceSet& set)
{
    std::string out = "# M=" + std::to_string(set.plan().spots()) + " n=" + std::to_string(set.length()) +
                      " q=" + std::to_string(set.size()) + " kind=" + std::string(to_string(set.kind())) + "\n";
    for (const auto& member : set.members()) {
        bool first = true;
        for (Spot s : member.hops()) {
            if (!first) out += ',';
            out += std::to_string(s);
            first = false;
        }
        out += '\n';
    }
    return out;
}

SequenceSet parse_sequence_set(std::string_view text, const std::string& source)
{
    const auto lines = split_lines(text);
    if (lines.empty()) throw ParseError(source, 1, 1, "empty input");
    const Header header = parse_header(lines[0], source);

    std::uint32_t p = 0;
    try {
        p = smallest_prime_factor(header.spots);
        FrequencyPlan::from_spots(p, header.spots);
    } catch (const Error&) {
        throw ParseError(source, lines[0].number, 1, "M=" + std::to_string(header.spots) + " is not a prime power");
    }
    const FrequencyPlan plan = FrequencyPlan::from_spots(p, header.spots);

    std::vector<HopSequence> members;
    std::size_t k = 1;
    for (; k < lines.size() && members.size() < header.q; ++k) {
        const Line& line = lines[k];
        std::vector<Spot> hops;
        hops.reserve(header.length);
        std::size_t pos = 0;
        while (true) {
            const std::size_t end = std::min(line.text.find(',', pos), line.text.size());
            const auto token = line.text.substr(pos, end - pos);
            const auto value = parse_unsigned(token);
            if (!value) {
                throw ParseError(source, line.number, pos + 1,
                                 "expected a decimal spot index, found '" + std::string(token) + "'");
            }
            if (*value >= header.spots) {
                throw ParseError(source, line.number, pos + 1,
                                 "spot " + std::to_string(*value) + " is not below M=" + std::to_string(header.spots));
            }
            hops.push_back(static_cast<Spot>(*value));
            if (end == line.text.size()) break;
            pos = end + 1;
        }
        if (hops.size() != header.length) {
            throw ParseError(source, line.number, line.text.size() + 1,
                             "sequence has " + std::to_string(hops.size()) + " entries, header says n=" +
                                 std::to_string(header.length));
        }
        members.emplace_back(std::move(hops), plan);
    }
    if (members.size() != header.q) {
        const std::size_t at = lines.back().number + (lines.back().text.empty() ? 0 : 1);
        throw ParseError(source, at, 1,
                         "found " + std::to_string(members.size()) + " sequences, header says q=" +
                             std::to_string(header.q));
    }
    for (; k < lines.size(); ++k) {
        if (!lines[k].text.empty()) {
            throw ParseError(source, lines[k].number, 1, "unexpected content after the last sequence");
        }
    }
    return SequenceSet(std::move(members), header.kind);
}

std::string read_text_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::io, "cannot open '" + path.string() + "' for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw Error(ErrorKind::io, "failed reading '" + path.string() + "'");
    return buffer.str();
}

SequenceSet read_sequence_file(const std::filesystem::path& path)
{
    return parse_sequence_set(read_text_file(path), path.string());
}

Polynomial parse_polynomial(std::string_view text)
{
    Polynomial taps;
    std::size_t pos = 0;
    while (true) {
        const std::size_t end = std::min(text.find(',', pos), text.size());
        auto token = text.substr(pos, end - pos);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        const auto value = parse_unsigned(token);
        if (!value || *value > 0xffffffffu) {
            throw Error(ErrorKind::config, "polynomial coefficient '" + std::string(token) + "' at offset " +
                                               std::to_string(pos) + " is not a non-negative integer");
        }
        taps.push_back(static_cast<Symbol>(*value));
        if (end == text.size()) break;
        pos = end + 1;
    }
    return taps;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content)
{
    std::error_code ec;
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path(), ec);
        if (ec) throw Error(ErrorKind::io, "cannot create '" + path.parent_path().string() + "': " + ec.message());
    }
    auto temp = path;
    temp += ".tmp";
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(ErrorKind::io, "cannot open '" + temp.string() + "' for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) throw Error(ErrorKind::io, "failed writing '" + temp.string() + "'");
    }
    std::filesystem::rename(temp, path, ec);
    if (ec) {
        std::filesystem::remove(temp, ec);
        throw Error(ErrorKind::io, "cannot move output into '" + path.string() + "'");
    }
}

std::string format_double(double value)
{
    char buffer[64];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
    return ec == std::errc{} ? std::string(buffer, ptr) : std::string("nan");
}

std::string ledger_ops_csv(const OperationLedger& ledger)
{
    std::string out = "seq_index,op_count\n";
    for (std::size_t a = 0; a < ledger.family_size(); ++a) {
        out += std::to_string(a) + "," + std::to_string(ledger.op_count(a)) + "\n";
    }
    return out;
}

std::string ledger_usage_csv(const OperationLedger& ledger)
{
    std::string out = spot_header(ledger.spots());
    for (std::size_t a = 0; a < ledger.family_size(); ++a) out += join_counts(a, ledger.usage_row(a));
    return out;
}

std::string histogram_csv(const std::vector<std::vector<std::size_t>>& histograms)
{
    std::string out = spot_header(histograms.empty() ? 0 : histograms.front().size());
    for (std::size_t a = 0; a < histograms.size(); ++a) out += join_counts(a, histograms[a]);
    return out;
}

std::string profile_csv(const CorrelationProfile& profile)
{
    std::string out = "delay,count\n";
    for (std::size_t d = 0; d < profile.values.size(); ++d) {
        out += std::to_string(d) + "," + std::to_string(profile.values[d]) + "\n";
    }
    return out;
}

std::string fairness_csv(const FairnessReport& report)
{
    std::string out = "q,mean_ops,normalized\n";
    for (const auto& point : report.points) {
        out += std::to_string(point.q) + "," + format_double(point.mean_ops) + "," + format_double(point.normalized) +
               "\n";
    }
    out += "# fit h1=" + format_double(report.fit.slope) + " h2=" + format_double(report.fit.intercept) + "\n";
    return out;
}

} // namespace cfbfhs
