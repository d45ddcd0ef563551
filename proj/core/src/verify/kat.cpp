#include "hlspipe/verify.hpp"

#include <fstream>
#include <sstream>

#include "hlspipe/util/hex.hpp"
#include "hlspipe/util/subprocess.hpp"

namespace hlspipe::verify {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    size_t pos = 0;
    while (true) {
        size_t next = s.find(sep, pos);
        if (next == std::string_view::npos) {
            out.push_back(s.substr(pos));
            break;
        }
        out.push_back(s.substr(pos, next - pos));
        pos = next + 1;
    }
    return out;
}

}  // namespace

std::string KatSuite::serialize() const {
    std::ostringstream os;
    if (seed) os << "# seed = " << *seed << "\n";
    os << "# schema = ";
    for (size_t i = 0; i < schema.size(); ++i) {
        if (i) os << ",";
        os << schema[i].name << ':' << (schema[i].dir == Direction::In ? "in" : "out")
           << ':' << schema[i].byte_len;
    }
    os << "\n\n";
    for (const auto& c : cases) {
        os << "count = " << c.count << "\n";
        for (const auto& f : schema) {
            auto it = c.values.find(f.name);
            os << f.name << " = " << (it == c.values.end() ? "" : util::hex_encode(it->second))
               << "\n";
        }
        os << "\n";
    }
    return os.str();
}

KatSuite parse_kats(std::string_view text) {
    KatSuite suite;
    bool schema_from_header = false;

    std::vector<std::string_view> lines = split(text, '\n');
    size_t line_no = 0;
    KatCase cur;
    bool in_case = false;
    std::vector<FieldSchema> first_case_fields;

    auto flush_case = [&]() {
        if (!in_case) return;
        if (suite.schema.empty()) {
            suite.schema = first_case_fields;
        }
        if (cur.values.size() != suite.schema.size()) throw SchemaMismatch(cur.count);
        for (const auto& f : suite.schema) {
            auto it = cur.values.find(f.name);
            if (it == cur.values.end() || it->second.size() != f.byte_len) {
                throw SchemaMismatch(cur.count);
            }
        }
        int expected = int(suite.cases.size());
        if (cur.count != expected) throw SchemaMismatch(cur.count);
        suite.cases.push_back(std::move(cur));
        cur = KatCase{};
        first_case_fields.clear();
        in_case = false;
    };

    for (std::string_view raw : lines) {
        ++line_no;
        std::string_view line = trim(raw);
        if (line.empty()) {
            flush_case();
            continue;
        }
        if (line[0] == '#') {
            std::string_view body = trim(line.substr(1));
            if (body.substr(0, 4) == "seed") {
                size_t eq = body.find('=');
                if (eq != std::string_view::npos) {
                    std::string v(trim(body.substr(eq + 1)));
                    try {
                        suite.seed = std::stoull(v);
                    } catch (...) {
                        throw ParseError(line_no, "bad seed value");
                    }
                }
            } else if (body.substr(0, 6) == "schema") {
                size_t eq = body.find('=');
                if (eq == std::string_view::npos) throw ParseError(line_no, "bad schema header");
                for (auto fs : split(trim(body.substr(eq + 1)), ',')) {
                    auto parts = split(fs, ':');
                    if (parts.size() != 3) throw ParseError(line_no, "bad schema field");
                    FieldSchema f;
                    f.name = std::string(trim(parts[0]));
                    std::string_view dir = trim(parts[1]);
                    if (dir == "in") f.dir = Direction::In;
                    else if (dir == "out") f.dir = Direction::Out;
                    else throw ParseError(line_no, "bad field direction");
                    try {
                        f.byte_len = std::stoul(std::string(trim(parts[2])));
                    } catch (...) {
                        throw ParseError(line_no, "bad field length");
                    }
                    suite.schema.push_back(std::move(f));
                }
                schema_from_header = true;
            }
            continue;
        }

        size_t eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError(line_no, "expected 'name = value'");
        std::string key(trim(line.substr(0, eq)));
        std::string value(trim(line.substr(eq + 1)));

        if (key == "count") {
            flush_case();
            in_case = true;
            try {
                cur.count = std::stoi(value);
            } catch (...) {
                throw ParseError(line_no, "bad count");
            }
            continue;
        }
        if (!in_case) throw ParseError(line_no, "field outside a case");
        auto bytes = util::hex_decode(value);
        if (!bytes) throw ParseError(line_no, "invalid hex for field " + key);
        cur.values[key] = std::move(*bytes);
        if (!schema_from_header && suite.cases.empty()) {
            FieldSchema f;
            f.name = key;
            f.byte_len = cur.values[key].size();
            f.dir = Direction::In;  // resolved after the first case
            first_case_fields.push_back(std::move(f));
        }
    }
    flush_case();

    // Header-less rsp ingestion: with no schema line, treat the final field
    // of each case as the output and everything else as input.
    if (!schema_from_header && !suite.schema.empty()) {
        suite.schema.back().dir = Direction::Out;
    }
    return suite;
}

KatSuite load_kats(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_kats(ss.str());
}

std::string KatOutcome::summary() const {
    std::ostringstream os;
    os << passed << " passed, " << failed << " failed";
    if (first_mismatch) {
        os << "; first mismatch: case " << first_mismatch->case_index << " field "
           << first_mismatch->field << " expected " << first_mismatch->expected_hex
           << " actual " << first_mismatch->actual_hex;
    }
    return os.str();
}

KatOutcome run_kats(const std::filesystem::path& binary, const KatSuite& suite,
                    int timeout_seconds) {
    // All stimulus upfront; the harness loops until EOF.
    std::string stdin_data;
    for (const auto& c : suite.cases) {
        for (const auto& f : suite.schema) {
            if (f.dir != Direction::In) continue;
            auto it = c.values.find(f.name);
            stdin_data += it == c.values.end() ? "" : util::hex_encode(it->second);
            stdin_data += "\n";
        }
    }

    util::RunResult rr = util::run_process({binary.string()}, stdin_data, timeout_seconds);
    if (rr.timed_out) throw RunTimeout();
    if (rr.exit_code != 0) throw ExecutionFailed(rr.exit_code);

    KatOutcome outcome;
    std::vector<std::string_view> lines = split(rr.out, '\n');
    size_t li = 0;
    auto next_line = [&]() -> std::optional<std::string_view> {
        while (li < lines.size()) {
            std::string_view l = trim(lines[li]);
            ++li;
            return l;
        }
        return std::nullopt;
    };

    for (const auto& c : suite.cases) {
        bool case_ok = true;
        for (const auto& f : suite.schema) {
            if (f.dir != Direction::Out) continue;
            auto line = next_line();
            while (line && line->empty()) line = next_line();  // tolerate stray blanks
            if (!line) throw ProtocolError(c.count);
            auto actual = util::hex_decode(*line);
            if (!actual || actual->size() != f.byte_len) throw ProtocolError(c.count);
            const auto& expected = c.values.at(f.name);
            if (*actual != expected) {
                if (case_ok && !outcome.first_mismatch) {
                    outcome.first_mismatch = Mismatch{
                        c.count, f.name, util::hex_encode(expected), util::hex_encode(*actual)};
                }
                case_ok = false;
            }
        }
        if (case_ok) ++outcome.passed;
        else ++outcome.failed;
    }
    return outcome;
}

}  // namespace hlspipe::verify
