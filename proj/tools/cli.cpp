#include "cli.hpp"

#include "macs/macs.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace macs::cli {

namespace {

using nlohmann::json;

int parse_positive(std::string_view text, const char* what) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value < 1) {
        throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be a positive integer, got '" +
                                                    std::string(text) + "'");
    }
    return value;
}

GridShape parse_shape(const std::string& text) {
    const auto x = text.find_first_of("xX");
    if (x == std::string::npos) {
        throw Error(ErrorCode::InvalidArgument, "shape must look like M1xM2, got '" + text + "'");
    }
    return GridShape(parse_positive(std::string_view(text).substr(0, x), "m1"),
                     parse_positive(std::string_view(text).substr(x + 1), "m2"));
}

struct ShapeOptions {
    std::string shape;
    int m = 0;

    void attach(CLI::App* sub) {
        sub->add_option("--shape", shape, "grid shape M1xM2");
        sub->add_option("--m", m, "square shape NxN");
    }

    std::optional<GridShape> get() const {
        if (!shape.empty() && m != 0) {
            throw Error(ErrorCode::InvalidArgument, "give either --shape or --m, not both");
        }
        if (!shape.empty()) {
            return parse_shape(shape);
        }
        if (m != 0) {
            if (m < 1) {
                throw Error(ErrorCode::InvalidArgument, "--m must be positive");
            }
            return GridShape(m, m);
        }
        return std::nullopt;
    }

    GridShape require() const {
        if (auto s = get()) {
            return *s;
        }
        throw Error(ErrorCode::InvalidArgument, "a shape is required (--shape M1xM2 or --m N)");
    }
};

json envelope(const std::string& method, GridShape shape, const BigCount& value) {
    return {{"method", method}, {"m1", shape.m1}, {"m2", shape.m2}, {"value", to_decimal(value)}};
}

// ---------------------------------------------------------------------------
// count

struct CountArgs {
    std::string method;
    std::vector<int> dims;
    ShapeOptions shape;
    std::string format = "text";
};

void require_square(GridShape s, const std::string& method) {
    if (s.m1 != s.m2) {
        throw Error(ErrorCode::InvalidArgument, method + " counts only square shapes; got " + std::to_string(s.m1) +
                                                    "x" + std::to_string(s.m2));
    }
}

BigCount count_one(const std::string& method, GridShape s) {
    if (method == "antichains") {
        return count_antichains(s.m1, s.m2);
    }
    if (method == "heinz") {
        require_square(s, method);
        return count_maximal_heinz(s.m1);
    }
    if (method == "explicit") {
        require_square(s, method);
        return count_maximal_explicit(s.m1);
    }
    if (method == "double") {
        return count_maximal_double(s.m1, s.m2).dF;
    }
    if (method == "simple") {
        return count_maximal_simple(s.m1, s.m2);
    }
    return brute_force_count_maximal(s, enumeration_guard());
}

int cmd_count(const CountArgs& a, std::ostream& out, std::ostream& err) {
    GridShape s = [&] {
        if (auto from_flags = a.shape.get()) {
            if (!a.dims.empty()) {
                throw Error(ErrorCode::InvalidArgument, "shape given twice");
            }
            return *from_flags;
        }
        if (a.dims.empty() || a.dims.size() > 2) {
            throw Error(ErrorCode::InvalidArgument, "count needs m1 [m2], --shape or --m");
        }
        for (int d : a.dims) {
            if (d < 1) {
                throw Error(ErrorCode::InvalidArgument, "shape arguments must be positive");
            }
        }
        return GridShape(a.dims[0], a.dims.size() == 2 ? a.dims[1] : a.dims[0]);
    }();

    const bool as_json = a.format == "json";
    if (a.method != "all") {
        const BigCount value = count_one(a.method, s);
        if (as_json) {
            json j = envelope(a.method, s, value);
            if (a.method == "double") {
                j["dFh"] = to_decimal(count_maximal_double(s.m1, s.m2).dFh);
            }
            out << j.dump() << '\n';
        } else {
            out << value << '\n';
        }
        return kOk;
    }

    std::vector<std::string> methods;
    if (s.m1 == s.m2) {
        methods = {"heinz", "explicit"};
    }
    methods.insert(methods.end(), {"double", "simple"});
    if (s.m1 + s.m2 <= enumeration_guard()) {
        methods.push_back("oracle");
    }

    std::vector<std::pair<std::string, BigCount>> results;
    bool failed = false;
    for (const auto& m : methods) {
        try {
            results.emplace_back(m, count_one(m, s));
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NonIntegerStep) {
                throw;
            }
            err << m << ": " << e.what() << '\n';
            failed = true;
        }
    }
    json arr = json::array();
    for (const auto& [m, v] : results) {
        if (as_json) {
            arr.push_back(envelope(m, s, v));
        } else {
            out << m << ' ' << v << '\n';
        }
        if (v != results.front().second) {
            failed = true;
        }
    }
    if (as_json) {
        out << arr.dump() << '\n';
    }
    if (failed) {
        err << "methods disagree at " << s.m1 << "x" << s.m2 << '\n';
        return kDisagreement;
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// table

struct TableArgs {
    int max1 = 0;
    int max2 = 0;
    std::string which;
    std::string format = "csv";
};

int cmd_table(const TableArgs& a, std::ostream& out) {
    if (a.max1 < 1 || a.max2 < 1) {
        throw Error(ErrorCode::InvalidArgument, "table dimensions must be >= 1");
    }
    const TableKind kind = a.which == "dF" ? TableKind::DF : a.which == "dFh" ? TableKind::DFh : TableKind::DE;
    const CountTable table = build_table(a.max1, a.max2);
    if (a.format == "csv") {
        out << to_csv(table, kind);
        return kOk;
    }
    json rows = json::array();
    const CountGrid& grid = select(table, kind);
    for (int i = 1; i <= a.max1; ++i) {
        json row = json::array();
        for (int j = 1; j <= a.max2; ++j) {
            row.push_back(to_decimal(grid.at(i, j)));
        }
        rows.push_back(row);
    }
    out << json{{"table", a.which}, {"max1", a.max1}, {"max2", a.max2}, {"rows", rows}}.dump() << '\n';
    return kOk;
}

// ---------------------------------------------------------------------------
// convert

struct ConvertArgs {
    std::string from;
    std::string to;
    std::string payload;
    ShapeOptions shape;
    bool maximal = false;
    std::string orientation = "up";
    std::string format = "text";
};

WalkOrientation parse_orientation(const std::string& o) {
    return o == "down" ? WalkOrientation::Down : WalkOrientation::Up;
}

struct Source {
    std::optional<PointSet> chain; // strict-chain hub of every decodable source
    std::optional<Walk> walk;
    bool antichain_side = false; // source was an antichain or a word
};

Source load_source(const ConvertArgs& a) {
    Source src;
    if (a.from == "antichain") {
        const PointSet s = parse_points(a.payload, a.shape.require());
        src.chain = antichain_to_strict_chain(s);
        src.antichain_side = true;
    } else if (a.from == "strict_chain") {
        const PointSet s = parse_points(a.payload, a.shape.require());
        require_kind(s, SetKind::StrictChain, ErrorCode::NotStrictChain);
        src.chain = s;
    } else if (a.from == "word") {
        const Word w(a.payload);
        const GridShape shape = a.shape.get().value_or(w.is_canonical() ? w.implied_shape() : GridShape(1, 1));
        src.chain = word_to_strict_chain(w, shape);
        src.antichain_side = true;
    } else if (a.from == "alignment") {
        src.chain = alignment_to_strict_chain(parse_alignment_json(a.payload));
    } else {
        const Walk w = parse_walk(a.payload, parse_orientation(a.orientation));
        if (auto s = a.shape.get(); s && !(*s == w.shape())) {
            throw Error(ErrorCode::LengthMismatch, "walk does not fit the given shape");
        }
        src.walk = w;
        if (w.orientation() == WalkOrientation::Up) {
            src.chain = walk_to_strict_chain(w);
        }
    }
    return src;
}

int cmd_convert(const ConvertArgs& a, std::ostream& out) {
    const Source src = load_source(a);
    if (!src.chain && a.to != "grid_points") {
        // Down-walk nodes live on the (m1+1) x (m2+1) node grid; no offset
        // onto [m1] x [m2] is assumed.
        throw Error(ErrorCode::InvalidArgument, "a down walk converts only to grid_points");
    }
    const PointSet chain = src.chain.value_or(PointSet(GridShape(1, 1)));
    const PointSet antichain = strict_chain_to_antichain(chain);

    std::string value;
    json json_value;
    std::optional<bool> maximal;
    std::vector<Point> augmenting;

    if (a.to == "antichain") {
        value = format_points(antichain);
        maximal = is_maximal(antichain, SetKind::Antichain);
    } else if (a.to == "strict_chain") {
        value = format_points(chain);
        maximal = is_maximal(chain, SetKind::StrictChain);
    } else if (a.to == "word") {
        const Word w = src.antichain_side ? antichain_to_word(antichain) : strict_chain_to_word(chain);
        value = w.str();
        maximal = word_is_maximal(w);
    } else if (a.to == "alignment") {
        const Alignment al = strict_chain_to_alignment(chain);
        json_value = alignment_to_json(al);
        value = json_value.dump();
        maximal = !alignment_has_alternate_skips(al);
    } else if (a.to == "walk") {
        const Walk w = strict_chain_to_walk(chain);
        value = format_walk(w);
        maximal = walk_strict_chain_is_maximal(w);
    } else if (a.to == "grid_points") {
        if (!src.walk) {
            throw Error(ErrorCode::InvalidArgument, "grid_points is read off a walk; use --from walk");
        }
        const Walk& w = *src.walk;
        if (w.orientation() == WalkOrientation::Up) {
            value = format_points(walk_to_strict_chain(w));
            maximal = walk_strict_chain_is_maximal(w);
        } else {
            value = format_points(walk_to_antichain(w));
            maximal = walk_antichain_is_maximal(w);
        }
        augmenting = walk_augmenting_points(w);
    } else if (a.to == "augmentation") {
        const BinaryMatrix m = src.antichain_side ? augmentation_matrix(antichain, SetKind::Antichain)
                                                  : augmentation_matrix(chain, SetKind::StrictChain);
        value = format_matrix(m);
        maximal = m.is_null();
    } else {
        const auto [first, second] = src.antichain_side ? step_matrices(antichain) : chain_step_matrices(chain);
        value = format_matrix(first) + "\n" + format_matrix(second);
    }

    if (a.format == "json") {
        json j{{"from", a.from}, {"to", a.to}};
        j["value"] = json_value.is_null() ? json(value) : json_value;
        if (a.maximal && maximal) {
            j["maximal"] = *maximal;
            if (a.to == "grid_points") {
                j["augmenting"] = format_points(augmenting);
            }
        }
        out << j.dump() << '\n';
        return kOk;
    }
    out << value;
    if (value.empty() || value.back() != '\n') {
        out << '\n';
    }
    if (a.maximal && maximal) {
        out << "maximal=" << (*maximal ? "true" : "false") << '\n';
        if (a.to == "grid_points") {
            out << "augmenting=" << format_points(augmenting) << '\n';
        }
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// check

struct Property {
    std::string name;
    bool ok = true;
    std::string detail;
};

class Tally {
public:
    void record(const std::string& name, bool ok, const std::string& where = {}) {
        auto [it, fresh] = index_.try_emplace(name, props_.size());
        if (fresh) {
            props_.push_back({name, true, {}});
            counts_.push_back(0);
        }
        ++counts_[it->second];
        if (!ok && props_[it->second].ok) {
            props_[it->second].ok = false;
            props_[it->second].detail = "first failure at " + where;
        }
    }

    std::vector<Property> finish(const std::string& unit) {
        for (std::size_t i = 0; i < props_.size(); ++i) {
            if (props_[i].ok) {
                props_[i].detail = std::to_string(counts_[i]) + " " + unit;
            }
        }
        return props_;
    }

private:
    std::vector<Property> props_;
    std::vector<long long> counts_;
    std::map<std::string, std::size_t> index_;
};

std::string shape_name(GridShape s) { return std::to_string(s.m1) + "x" + std::to_string(s.m2); }

std::vector<Property> check_tables(int limit) {
    if (limit < 1 || limit > 8) {
        throw Error(ErrorCode::InvalidArgument, "published tables cover 1..8");
    }
    const CountTable t = build_table(limit, limit);
    Tally tally;
    for (int i = 1; i <= limit; ++i) {
        for (int j = 1; j <= limit; ++j) {
            const std::string at = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
            tally.record("dF matches the published table", t.dF.at(i, j) == reference::kMaximalAntichains[i - 1][j - 1],
                         at);
            tally.record("dFh matches the published table", t.dFh.at(i, j) == reference::kMaximalFirstStep[i - 1][j - 1],
                         at);
        }
    }
    auto props = tally.finish("cell comparisons");
    props.push_back({"simple, double, Heinz and explicit agree", true, "up to " + shape_name({limit, limit})});
    return props;
}

std::vector<Property> check_bijections(int limit) {
    require_enumerable(GridShape(limit, limit), enumeration_guard());
    Tally tally;
    for (int m1 = 1; m1 <= limit; ++m1) {
        for (int m2 = 1; m2 <= limit; ++m2) {
            const GridShape shape(m1, m2);
            const auto all = enumerate_antichains(shape);
            tally.record("antichain count equals the binomial",
                         BigCount(all.size()) == count_antichains(m1, m2), shape_name(shape));
            for (const PointSet& a : all) {
                const std::string at = shape_name(shape) + " " + format_points(a);
                const Word w = antichain_to_word(a);
                tally.record("antichain -> word -> antichain", word_to_antichain(w, shape) == a, at);
                const PointSet c = antichain_to_strict_chain(a);
                tally.record("antichain -> strict chain -> antichain", strict_chain_to_antichain(c) == a, at);
                const bool maximal = is_maximal(a, SetKind::Antichain);
                tally.record("no \"vh\" iff augmentation matrix is null", word_is_maximal(w) == maximal, at);
                const auto [nw, se] = step_matrices(a);
                tally.record("step-matrix noses are the antichain", noses(nw) == a && noses(se) == a, at);
                tally.record("augmentation matrix has consecutive ones",
                             has_consecutive_ones(augmentation_matrix(a, SetKind::Antichain)), at);
                const Alignment al = strict_chain_to_alignment(c);
                tally.record("alignment round trip", alignment_to_strict_chain(al) == c, at);
                tally.record("alternate skips iff not maximal", alignment_has_alternate_skips(al) == !maximal, at);
                const Walk walk = strict_chain_to_walk(c);
                tally.record("walk round trip", walk_to_strict_chain(walk) == c && walk_to_word(walk).str() == w.str(), at);
                tally.record("disjoint V'H' iff not maximal", walk_strict_chain_is_maximal(walk) == maximal, at);
            }
        }
    }
    return tally.finish("objects");
}

std::vector<Property> check_oracle(int limit) {
    const int guard = enumeration_guard();
    require_enumerable(GridShape(limit, limit), guard);
    Tally tally;
    for (int m1 = 1; m1 <= limit; ++m1) {
        for (int m2 = 1; m2 <= limit; ++m2) {
            const GridShape shape(m1, m2);
            const BigCount brute = brute_force_count_maximal(shape, guard);
            tally.record("simple recurrence equals enumeration", count_maximal_simple(m1, m2) == brute,
                         shape_name(shape));
            tally.record("double recurrence equals enumeration", count_maximal_double(m1, m2).dF == brute,
                         shape_name(shape));
            if (m1 == m2) {
                tally.record("Heinz recurrence equals enumeration", count_maximal_heinz(m1) == brute,
                             shape_name(shape));
                tally.record("explicit formula equals enumeration", count_maximal_explicit(m1) == brute,
                             shape_name(shape));
            }
        }
    }
    return tally.finish("shapes");
}

struct CheckArgs {
    std::string scope;
    std::optional<int> limit;
};

int cmd_check(const CheckArgs& a, std::ostream& out) {
    std::vector<Property> props;
    bool divisibility = false;
    if (a.scope == "tables") {
        props = check_tables(a.limit.value_or(8));
    } else if (a.scope == "bijections") {
        props = check_bijections(a.limit.value_or(5));
    } else if (a.scope == "oracle") {
        props = check_oracle(a.limit.value_or(6));
    } else {
        divisibility = true;
        const int limit = a.limit.value_or(200);
        if (limit < 1) {
            throw Error(ErrorCode::InvalidArgument, "limit must be >= 1");
        }
        const HeinzRun run = run_heinz(limit);
        Property p{"Heinz bracket divisible by m", !run.first_failure, {}};
        p.detail = run.first_failure ? "fails at m = " + std::to_string(*run.first_failure)
                                     : "m = 4.." + std::to_string(limit);
        props.push_back(p);
    }
    std::size_t passed = 0;
    for (const auto& p : props) {
        out << (p.ok ? "PASS " : "FAIL ") << p.name << ": " << p.detail << '\n';
        passed += p.ok ? 1 : 0;
    }
    out << passed << "/" << props.size() << " properties passed\n";
    if (passed == props.size()) {
        return kOk;
    }
    return divisibility ? kDisagreement : kPropertyFailure;
}

// ---------------------------------------------------------------------------
// render

struct RenderArgs {
    std::string kind;
    std::string payload;
    ShapeOptions shape;
    std::string as = "antichain";
    std::string orientation = "up";
    std::string strings;
    bool svg = false;
};

std::string cell_picture(const PointSet& s) {
    std::string out;
    for (int i = 1; i <= s.shape().m1; ++i) {
        for (int j = 1; j <= s.shape().m2; ++j) {
            out.push_back(s.contains({i, j}) ? '*' : '.');
        }
        out.push_back('\n');
    }
    return out;
}

int cmd_render(const RenderArgs& a, std::ostream& out) {
    const LineKind line = a.as == "strict_chain" ? LineKind::StrictChain : LineKind::Antichain;
    if (a.kind == "word") {
        const Word w(a.payload, line);
        const GridShape shape = a.shape.get().value_or(w.is_canonical() ? w.implied_shape() : GridShape(1, 1));
        if (a.svg) {
            out << render_word_svg(w, shape, line);
        } else {
            out << cell_picture(line == LineKind::Antichain ? word_to_antichain(w, shape)
                                                            : word_to_strict_chain(w, shape));
        }
    } else if (a.kind == "walk") {
        const Walk w = parse_walk(a.payload, parse_orientation(a.orientation));
        if (a.svg) {
            out << render_walk_svg(w);
        } else {
            out << format_walk_primed(w) << '\n';
        }
    } else {
        const Alignment al = parse_alignment_json(a.payload);
        if (a.svg) {
            out << render_word_svg(alignment_to_word(al), al.shape(), LineKind::StrictChain);
            return kOk;
        }
        AlignmentRows rows;
        if (a.strings.empty()) {
            rows = render_alignment(al);
        } else {
            const auto comma = a.strings.find(',');
            if (comma == std::string::npos) {
                throw Error(ErrorCode::InvalidArgument, "--strings takes FIRST,SECOND");
            }
            rows = render_alignment(al, a.strings.substr(0, comma), a.strings.substr(comma + 1));
        }
        out << rows.first << '\n' << rows.second << '\n';
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// enumerate

struct EnumerateArgs {
    std::string what;
    ShapeOptions shape;
    std::string orientation = "up";
    std::string format = "text";
};

int cmd_enumerate(const EnumerateArgs& a, std::ostream& out) {
    const GridShape shape = a.shape.require();
    require_enumerable(shape, enumeration_guard());
    std::vector<std::string> items;
    if (a.what == "words" || a.what == "maximal_words") {
        for (const Word& w : a.what == "words" ? enumerate_canonical_words(shape) : enumerate_maximal_words(shape)) {
            items.push_back(w.str());
        }
    } else if (a.what == "antichains" || a.what == "maximal_antichains") {
        for (const PointSet& s :
             a.what == "antichains" ? enumerate_antichains(shape) : enumerate_maximal_antichains(shape)) {
            items.push_back(format_points(s));
        }
    } else {
        for (const Walk& w : enumerate_walks(shape, parse_orientation(a.orientation))) {
            items.push_back(format_walk(w));
        }
    }
    if (a.format == "json") {
        out << json(items).dump() << '\n';
    } else {
        for (const auto& s : items) {
            out << s << '\n';
        }
    }
    return kOk;
}

int exit_code_for(ErrorCode code) {
    switch (code) {
    case ErrorCode::NonCanonicalWord: return kNonCanonical;
    case ErrorCode::MethodDisagreement:
    case ErrorCode::NonIntegerStep: return kDisagreement;
    default: return kUsage;
    }
}

} // namespace

int enumeration_guard() {
    const char* env = std::getenv("MACS_MAX_ENUM");
    if (env == nullptr || *env == '\0') {
        return kDefaultEnumerationGuard;
    }
    return parse_positive(env, "MACS_MAX_ENUM");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Antichains in products of two chains: codecs, counts and checks", "macs"};
    app.require_subcommand(1);

    CountArgs count;
    auto* c = app.add_subcommand("count", "count (maximal) antichains");
    c->add_option("method", count.method)
        ->required()
        ->check(CLI::IsMember({"antichains", "heinz", "explicit", "double", "simple", "oracle", "all"}));
    c->add_option("dims", count.dims, "m1 [m2]");
    count.shape.attach(c);
    c->add_option("--format", count.format)->check(CLI::IsMember({"text", "json"}));

    TableArgs table;
    auto* t = app.add_subcommand("table", "CSV table of dF, dFh or dE");
    t->add_option("max1", table.max1)->required();
    t->add_option("max2", table.max2)->required();
    t->add_option("which", table.which)->required()->check(CLI::IsMember({"dF", "dFh", "dE"}));
    t->add_option("--format", table.format)->check(CLI::IsMember({"csv", "json"}));

    const std::vector<std::string> reps{"antichain", "strict_chain", "word", "alignment", "walk"};
    ConvertArgs conv;
    auto* v = app.add_subcommand("convert", "translate between representations");
    v->add_option("from", conv.from)->required()->check(CLI::IsMember(reps));
    v->add_option("to", conv.to)
        ->required()
        ->check(CLI::IsMember({"antichain", "strict_chain", "word", "alignment", "walk", "grid_points",
                               "augmentation", "step_matrices"}));
    v->add_option("payload", conv.payload)->required();
    conv.shape.attach(v);
    v->add_flag("--maximal", conv.maximal, "also print maximal=true|false");
    v->add_option("--orientation", conv.orientation)->check(CLI::IsMember({"up", "down"}));
    v->add_option("--format", conv.format)->check(CLI::IsMember({"text", "json"}));

    CheckArgs check;
    auto* k = app.add_subcommand("check", "run an invariant suite");
    k->add_option("scope", check.scope)
        ->required()
        ->check(CLI::IsMember({"tables", "bijections", "oracle", "heinz-divisibility"}));
    k->add_option("limit", check.limit);

    int mmax = 0;
    auto* s = app.add_subcommand("asym", "growth ratios, densities and rho");
    s->add_option("mmax", mmax)->required();

    RenderArgs render;
    auto* r = app.add_subcommand("render", "draw a word, walk or alignment");
    r->add_option("kind", render.kind)->required()->check(CLI::IsMember({"word", "walk", "alignment"}));
    r->add_option("payload", render.payload)->required();
    render.shape.attach(r);
    r->add_option("--as", render.as)->check(CLI::IsMember({"antichain", "strict_chain"}));
    r->add_option("--orientation", render.orientation)->check(CLI::IsMember({"up", "down"}));
    r->add_option("--strings", render.strings, "FIRST,SECOND labels for an alignment");
    r->add_flag("--svg", render.svg);

    EnumerateArgs en;
    auto* e = app.add_subcommand("enumerate", "list every object of one shape");
    e->add_option("what", en.what)
        ->required()
        ->check(CLI::IsMember({"words", "maximal_words", "antichains", "maximal_antichains", "walks"}));
    en.shape.attach(e);
    e->add_option("--orientation", en.orientation)->check(CLI::IsMember({"up", "down"}));
    e->add_option("--format", en.format)->check(CLI::IsMember({"text", "json"}));

    std::vector<const char*> argv{"macs"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& pe) {
        const int code = app.exit(pe, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (c->parsed()) {
            return cmd_count(count, out, err);
        }
        if (t->parsed()) {
            return cmd_table(table, out);
        }
        if (v->parsed()) {
            return cmd_convert(conv, out);
        }
        if (k->parsed()) {
            return cmd_check(check, out);
        }
        if (s->parsed()) {
            out << asymptotics_csv(mmax);
            return kOk;
        }
        if (r->parsed()) {
            return cmd_render(render, out);
        }
        return cmd_enumerate(en, out);
    } catch (const Error& ex) {
        err << "error: " << ex.what() << '\n';
        return exit_code_for(ex.code());
    }
}

} // namespace macs::cli
