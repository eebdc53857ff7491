#include "nchilbert/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nchilbert/errors.hpp"

namespace nchilbert::cli {

namespace {

[[noreturn]] void parse_fail(std::size_t line, std::size_t col, const std::string& msg) {
    throw Error(ErrorKind::parse_error, std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
}

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

struct LineCursor {
    std::string_view text;
    std::size_t line;
    std::size_t pos = 0;

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_space();
        return pos >= text.size();
    }
    std::size_t col() const { return pos + 1; }
    std::string_view name() {
        skip_space();
        const std::size_t start = pos;
        if (pos < text.size() && is_name_start(text[pos]))
            while (pos < text.size() && is_name_char(text[pos])) ++pos;
        return text.substr(start, pos - start);
    }
};

Word parse_generator(LineCursor& cur, const Alphabet& alphabet) {
    cur.skip_space();
    if (cur.pos < cur.text.size() && cur.text[cur.pos] == '1') {
        ++cur.pos;
        if (!cur.done()) parse_fail(cur.line, cur.col(), "unexpected text after the empty word '1'");
        return Word{};
    }
    std::vector<Letter> letters;
    while (true) {
        const std::size_t col = cur.col();
        const std::string_view name = cur.name();
        if (name.empty()) parse_fail(cur.line, col, "expected a variable name");
        const int idx = alphabet.find(name);
        if (idx < 0) parse_fail(cur.line, col, "unknown variable '" + std::string(name) + "'");
        letters.push_back(static_cast<Letter>(idx));
        if (cur.done()) break;
        if (cur.text[cur.pos] != '*') parse_fail(cur.line, cur.col(), "expected '*' between variables");
        ++cur.pos;
    }
    return Word(std::move(letters));
}

std::string mode_banner(const ComputationRequest& req) {
    std::string s;
    if (std::holds_alternative<ExactMode>(req.mode)) s = "exact";
    if (const auto* t = std::get_if<TruncateMode>(&req.mode)) s = "truncate " + std::to_string(t->degree);
    if (const auto* b = std::get_if<DegreeBoundMode>(&req.mode)) s = "degree-bound " + std::to_string(b->bound);
    s += req.multigraded ? ", multigraded" : ", graded";
    if (req.affine) s += ", affine";
    s += req.kind == IdealKind::two_sided ? ", two-sided" : ", right";
    return s;
}

std::string mode_name(const Mode& mode) {
    if (std::holds_alternative<TruncateMode>(mode)) return "truncate";
    if (std::holds_alternative<DegreeBoundMode>(mode)) return "degree-bound";
    return "exact";
}

std::string coeff_string(const Rational& c) { return c.get_str(); }

nlohmann::ordered_json terms_json(const MPoly& p) {
    auto out = nlohmann::ordered_json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        auto term = nlohmann::ordered_json::array();
        term.push_back(coeff_string(it->second));
        for (auto e : it->first) term.push_back(e);
        out.push_back(std::move(term));
    }
    return out;
}

MPoly terms_from_json(const nlohmann::ordered_json& terms, std::size_t nvars) {
    MPoly p(nvars);
    for (const auto& term : terms) {
        if (!term.is_array() || term.size() != nvars + 1)
            throw Error(ErrorKind::parse_error, "malformed series term in JSON");
        Exponents e(nvars);
        for (std::size_t i = 0; i < nvars; ++i) e[i] = term[i + 1].get<std::uint32_t>();
        Rational c(term[0].get<std::string>());
        c.canonicalize();
        p.add_term(e, c);
    }
    return p;
}

// Oracle rows in display order: by total degree, then descending exponents.
std::vector<std::pair<MultiDegree, std::uint64_t>> oracle_rows(const OracleTable& table) {
    std::vector<std::pair<MultiDegree, std::uint64_t>> rows(table.begin(), table.end());
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        if (a.first.total() != b.first.total()) return a.first.total() < b.first.total();
        return a.first.counts > b.first.counts;
    });
    return rows;
}

std::string degree_string(const MultiDegree& d) {
    std::string s = "[";
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(d.counts[i]);
    }
    return s + "]";
}

} // namespace

InputFile parse_input(std::string_view text) {
    InputFile input;
    bool have_vars = false, have_kind = false;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        LineCursor cur{line, line_no};
        if (cur.done()) continue;
        const std::size_t head_pos = cur.pos;
        const std::string_view head = cur.name();

        if (head == "vars" && (cur.pos >= line.size() || std::isspace(static_cast<unsigned char>(line[cur.pos])))) {
            if (have_vars) parse_fail(line_no, head_pos + 1, "duplicate 'vars' line");
            std::vector<std::string> names;
            while (!cur.done()) {
                const std::size_t col = cur.col();
                const std::string_view name = cur.name();
                if (name.empty()) parse_fail(line_no, col, "expected a variable name");
                if (std::find(names.begin(), names.end(), name) != names.end())
                    parse_fail(line_no, col, "duplicate variable '" + std::string(name) + "'");
                names.emplace_back(name);
            }
            if (names.empty()) parse_fail(line_no, cur.col(), "'vars' needs at least one variable");
            input.alphabet = Alphabet(std::move(names));
            have_vars = true;
            continue;
        }
        if (!have_vars) parse_fail(line_no, head_pos + 1, "the first line must be 'vars <name>...'");

        if (head == "kind" && input.alphabet.find("kind") < 0) {
            if (have_kind) parse_fail(line_no, head_pos + 1, "duplicate 'kind' line");
            const std::size_t col = cur.col();
            const std::string_view value = cur.name();
            if (value == "twosided")
                input.kind = IdealKind::two_sided;
            else if (value == "right")
                input.kind = IdealKind::right;
            else
                parse_fail(line_no, col, "kind must be 'twosided' or 'right'");
            if (!cur.done()) parse_fail(line_no, cur.col(), "unexpected text after kind");
            have_kind = true;
            continue;
        }
        cur.pos = head_pos;
        if (head == "gen") {
            std::size_t p = head_pos + 3;
            while (p < line.size() && std::isspace(static_cast<unsigned char>(line[p]))) ++p;
            if (p < line.size() && line[p] == ':') cur.pos = p + 1;
        }
        input.generators.push_back(parse_generator(cur, input.alphabet));
    }
    if (!have_vars) parse_fail(line_no, 1, "missing 'vars' line");
    if (input.generators.empty()) parse_fail(line_no, 1, "empty generator list");
    return input;
}

int exit_code_for(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::parse_error: return exit_parse_error;
    case ErrorKind::orbit_limit_exceeded: return exit_orbit_limit;
    case ErrorKind::degree_budget_exhausted: return exit_degree_budget;
    case ErrorKind::invalid_mode:
    case ErrorKind::not_symmetric:
    case ErrorKind::non_integer_coefficient:
    case ErrorKind::enumeration_budget: return exit_invalid_flags;
    default: return exit_failure;
    }
}

std::string render_text(const Report& report) {
    const ComputationRequest& req = *report.request;
    const ComputationResult& res = *report.result;
    const auto names = default_series_names(res.series.nvars());
    std::ostringstream os;
    os << "mode: " << mode_banner(req) << '\n';
    os << "variables:";
    for (const auto& v : req.alphabet.names()) os << ' ' << v;
    os << '\n';
    os << "orbit size: " << res.orbit_size << '\n';
    os << "max word length: " << res.max_word_length << '\n';
    if (res.series.is_polynomial())
        os << "series: " << to_string(res.series.as_polynomial(), names) << '\n';
    else
        os << "series: N(" << to_string(res.series.num(), names) << ") / D(" << to_string(res.series.den(), names)
           << ")\n";
    if (res.schur) {
        os << "schur:\n";
        for (const auto& [lambda, mult] : res.schur->multiplicities) os << to_string(lambda) << ' ' << mult << '\n';
    }
    if (report.oracle) {
        os << "oracle (degree " << *report.oracle_degree << "):\n";
        for (const auto& [deg, count] : oracle_rows(*report.oracle)) os << degree_string(deg) << ' ' << count << '\n';
    }
    if (res.heuristic) {
        os << "HEURISTIC: generators known up to degree " << std::get<DegreeBoundMode>(req.mode).bound;
        if (res.comparison_degree) os << "; ideals compared up to degree " << *res.comparison_degree;
        os << '\n';
    }
    return os.str();
}

nlohmann::ordered_json render_json(const Report& report) {
    const ComputationRequest& req = *report.request;
    const ComputationResult& res = *report.result;
    nlohmann::ordered_json j;
    j["format"] = 1;
    j["mode"] = mode_name(req.mode);
    if (const auto* t = std::get_if<TruncateMode>(&req.mode)) j["truncate"] = t->degree;
    if (const auto* b = std::get_if<DegreeBoundMode>(&req.mode)) j["degree_bound"] = b->bound;
    j["grading"] = req.multigraded ? "multigraded" : "graded";
    j["affine"] = req.affine;
    j["kind"] = req.kind == IdealKind::two_sided ? "twosided" : "right";
    j["vars"] = req.alphabet.names();
    j["orbit_size"] = res.orbit_size;
    j["max_word_length"] = res.max_word_length;
    j["heuristic"] = res.heuristic;
    if (res.comparison_degree) j["comparison_degree"] = *res.comparison_degree;

    nlohmann::ordered_json series;
    if (res.series.is_polynomial()) {
        series["kind"] = "polynomial";
        series["numerator"] = terms_json(res.series.as_polynomial());
    } else {
        series["kind"] = "rational";
        series["numerator"] = terms_json(res.series.num());
        series["denominator"] = terms_json(res.series.den());
    }
    j["series"] = std::move(series);

    if (res.schur) {
        auto table = nlohmann::ordered_json::array();
        for (const auto& [lambda, mult] : res.schur->multiplicities) {
            nlohmann::ordered_json row;
            row["partition"] = lambda.parts();
            row["mult"] = mult.get_str();
            table.push_back(std::move(row));
        }
        j["schur"] = std::move(table);
    }
    if (report.oracle) {
        auto table = nlohmann::ordered_json::array();
        for (const auto& [deg, count] : oracle_rows(*report.oracle)) {
            nlohmann::ordered_json row;
            row["degree"] = deg.counts;
            row["count"] = std::to_string(count);
            table.push_back(std::move(row));
        }
        j["oracle"] = std::move(table);
    }
    return j;
}

RatFun series_from_json(const nlohmann::ordered_json& series, std::size_t nvars) {
    MPoly num = terms_from_json(series.at("numerator"), nvars);
    if (series.at("kind") == "polynomial") return RatFun(std::move(num));
    return RatFun(std::move(num), terms_from_json(series.at("denominator"), nvars));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hilbert series of monomial quotients of free associative algebras", "nchilbert"};
    std::string input_path;
    bool multigraded = false, affine = false, schur = false, json = false;
    std::optional<unsigned> truncate, degree_bound, oracle;
    std::size_t max_orbit = default_max_orbit;
    app.add_option("input", input_path, "input file ('-' for stdin)")->required();
    app.add_flag("--multigraded", multigraded, "series in t1..tn instead of t");
    auto* trunc_opt = app.add_option("--truncate", truncate, "truncate at total degree d");
    auto* bound_opt = app.add_option("--degree-bound", degree_bound, "generators complete up to degree D (guess)");
    app.add_flag("--affine", affine, "affine series HS/(1-t)");
    app.add_flag("--schur", schur, "Schur decomposition of a polynomial multigraded series");
    app.add_option("--oracle", oracle, "also count normal words up to degree d");
    app.add_flag("--json", json, "machine-readable output");
    app.add_option("--max-orbit", max_orbit, "orbit size limit")->check(CLI::PositiveNumber);
    trunc_opt->excludes(bound_opt);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_invalid_flags;
    }

    try {
        std::string text;
        if (input_path == "-") {
            std::ostringstream ss;
            ss << std::cin.rdbuf();
            text = ss.str();
        } else {
            std::ifstream in(input_path, std::ios::binary);
            if (!in) {
                err << "error: cannot read '" << input_path << "'\n";
                return exit_failure;
            }
            std::ostringstream ss;
            ss << in.rdbuf();
            text = ss.str();
        }
        InputFile input = parse_input(text);

        ComputationRequest req;
        req.alphabet = input.alphabet;
        req.generators = input.generators;
        req.kind = input.kind;
        if (truncate) req.mode = TruncateMode{*truncate};
        if (degree_bound) req.mode = DegreeBoundMode{*degree_bound};
        req.multigraded = multigraded;
        req.affine = affine;
        req.schur = schur;
        req.max_orbit = max_orbit;
        validate(req);

        const ComputationResult result = hilbert_series(req);
        std::optional<OracleTable> table;
        if (oracle) {
            ComputationRequest oreq = req;
            oreq.mode = TruncateMode{*oracle};
            table = normal_words_oracle(oreq);
        }
        Report report{&req, &result, oracle, table ? &*table : nullptr};
        if (json)
            out << render_json(report).dump(2) << '\n';
        else
            out << render_text(report);
        return exit_ok;
    } catch (const Error& e) {
        err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return exit_code_for(e.kind());
    }
}

} // namespace nchilbert::cli
