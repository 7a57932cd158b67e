// Command-line workbench: construct the extremal families, check properties,
// run exact searches and theorem scans, tabulate bounds, and evaluate the
// exact ratio machinery. Exit codes: 0 success / property holds, 1 property
// violated, 2 usage or parse error, 3 resource limit, 4 timeout.

#include "twopart/asymptotics.hpp"
#include "twopart/constructions.hpp"
#include "twopart/io.hpp"
#include "twopart/properties.hpp"
#include "twopart/search.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>

using namespace twopart;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Output {
    std::string format = "text";            // text | json | csv
    std::optional<std::string> out_path;    // default stdout
};

struct CmdResult {
    json outputs = json::object();
    std::vector<std::string> columns;                 // table part, optional
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> text;                    // human-readable lines
    int exit_code = 0;
    std::optional<std::string> file_payload;          // construct: the artifact itself
};

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void emit(const CmdResult& r, const Output& out, const std::string& command, double ms) {
    std::ostringstream body;
    if (out.format == "json") {
        json rep;
        rep["command"] = command;
        rep["version"] = kVersion;
        rep["timing_ms"] = ms;
        rep["outputs"] = r.outputs;
        if (!r.columns.empty()) {
            json rows = json::array();
            for (const auto& row : r.rows) {
                json obj = json::object();
                for (std::size_t c = 0; c < r.columns.size(); ++c) obj[r.columns[c]] = row[c];
                rows.push_back(std::move(obj));
            }
            rep["rows"] = std::move(rows);
        }
        body << rep.dump(2) << '\n';
    } else if (out.format == "csv") {
        if (!r.columns.empty()) {
            for (std::size_t c = 0; c < r.columns.size(); ++c)
                body << (c ? "," : "") << csv_escape(r.columns[c]);
            body << '\n';
            for (const auto& row : r.rows) {
                for (std::size_t c = 0; c < row.size(); ++c)
                    body << (c ? "," : "") << csv_escape(row[c]);
                body << '\n';
            }
        } else {
            body << "key,value\n";
            for (const auto& [key, value] : r.outputs.items())
                body << csv_escape(key) << ','
                     << csv_escape(value.is_string() ? value.get<std::string>() : value.dump())
                     << '\n';
        }
    } else {
        for (const auto& line : r.text) body << line << '\n';
        if (!r.columns.empty()) {
            for (std::size_t c = 0; c < r.columns.size(); ++c)
                body << (c ? "  " : "") << r.columns[c];
            body << '\n';
            for (const auto& row : r.rows) {
                for (std::size_t c = 0; c < row.size(); ++c) body << (c ? "  " : "") << row[c];
                body << '\n';
            }
        }
    }
    if (out.out_path)
        write_text_file(*out.out_path, body.str());
    else
        std::cout << body.str();
}

PropertyId parse_property(const std::string& name) {
    if (name == "2i") return PropertyId::TwoI;
    if (name == "2i2s") return PropertyId::TwoI2S;
    if (name == "1i1s") return PropertyId::OneI1S;
    if (name == "2ps" || name == "2-part-sperner") return PropertyId::TwoPartSperner;
    if (name == "sperner") return PropertyId::Sperner;
    if (name == "intersecting-lenient") return PropertyId::IntersectingLenient;
    if (name == "intersecting-strict") return PropertyId::IntersectingStrict;
    if (name == "cross-sperner") return PropertyId::CrossSpernerPair;
    throw std::invalid_argument("unknown property: " + name);
}

BigRatio parse_ratio(const std::string& text) {
    try {
        return BigRatio(text);
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse rational \"" + text + "\" (use p/q or an integer)");
    }
}

std::string mask_to_set_string(SubsetMask m, int n) {
    std::string out = "{";
    bool first = true;
    for (int e = 0; e < n; ++e)
        if (m >> e & 1) {
            if (!first) out += ",";
            out += std::to_string(e);
            first = false;
        }
    return out + "}";
}

json family_masks_json(const SetFamily& f) {
    json sets = json::array();
    for (SubsetMask m : f.masks) {
        json one = json::array();
        for (int e = 0; e < f.n; ++e)
            if (m >> e & 1) one.push_back(e);
        sets.push_back(std::move(one));
    }
    return sets;
}

// ---------------------------------------------------------------------------
// construct
// ---------------------------------------------------------------------------

struct ConstructArgs {
    std::string name;
    int n = 0;
    int k = -1;
    int i = -1;
    int threshold = -1;
    int star_a = 0, star_b = -1;
    std::string beta = "0";
    bool modified = false;
    std::string variant = "threshold";
    std::string file_format = "json";
};

CmdResult run_construct(const ConstructArgs& a) {
    CmdResult r;
    const BigRatio beta = parse_ratio(a.beta);

    const auto family_out = [&](const SetFamily& f, std::optional<int> k) {
        r.file_payload =
            a.file_format == "compact" ? family_to_compact(f, k) : family_to_json(f, k);
        r.outputs["size"] = std::to_string(f.size());
        r.text.push_back("size: " + std::to_string(f.size()));
    };
    const auto partition_out = [&](const LabeledPartition& p) {
        r.file_payload = partition_to_json(p);
        BigCount total = 0;
        for (const auto& c : p.classes) total += BigCount(c.family.size());
        r.outputs["classes"] = std::to_string(p.classes.size());
        r.outputs["total_sets"] = total.str();
        r.text.push_back("classes: " + std::to_string(p.classes.size()) +
                         ", total sets: " + total.str());
    };
    const auto pair_out = [&](const FamilyPair& p) {
        r.file_payload = pair_to_json(p);
        r.outputs["size_f"] = std::to_string(p.first.size());
        r.outputs["size_g"] = std::to_string(p.second.size());
        r.outputs["sum"] = std::to_string(p.first.size() + p.second.size());
        r.text.push_back("|F| = " + std::to_string(p.first.size()) +
                         ", |G| = " + std::to_string(p.second.size()));
    };

    if (a.name == "chain") {
        partition_out(chain_partition(a.n));
    } else if (a.name == "canonical") {
        partition_out(canonical_partition(a.n));
    } else if (a.name == "canonical-modified") {
        partition_out(modified_canonical_partition(a.n, beta));
    } else if (a.name == "2i-singleton") {
        family_out(two_i_singleton(a.n), 1);
    } else if (a.name == "2i-equal") {
        family_out(two_i_equal(a.n), a.n / 2);
    } else if (a.name == "2i2s-smallpart") {
        if (a.k < 0) throw std::invalid_argument("2i2s-smallpart needs --k");
        family_out(two_i2s_smallpart(GroundSplit(a.n, a.k)), a.k);
    } else if (a.name == "2i2s-equal") {
        family_out(two_i2s_equal(a.n, a.modified, beta), a.n / 2);
    } else if (a.name == "cross-sperner") {
        CrossVariant v;
        if (a.variant == "star-empty")
            v = CrossVariant::StarEmpty;
        else if (a.variant == "two-stars")
            v = CrossVariant::TwoStars;
        else if (a.variant == "threshold")
            v = CrossVariant::Threshold;
        else
            throw std::invalid_argument("unknown cross-sperner variant: " + a.variant);
        pair_out(cross_sperner_pair_example(a.n, v, a.threshold));
    } else if (a.name == "1i1s-product") {
        if (a.k < 0) throw std::invalid_argument("1i1s-product needs --k");
        const int star_b = a.star_b < 0 ? a.k : a.star_b;
        family_out(one_i1s_product(GroundSplit(a.n, a.k), a.star_a, star_b), a.k);
    } else if (a.name == "ff-pair") {
        if (a.i < 0) throw std::invalid_argument("ff-pair needs --i");
        pair_out(ff_pair(a.n, a.i));
    } else {
        throw std::invalid_argument("unknown construction: " + a.name);
    }
    return r;
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

struct CheckArgs {
    std::string property;
    std::string in_path;
    std::string in2_path;
    int k = -1;
};

CmdResult run_check(const CheckArgs& a) {
    CmdResult r;
    const PropertyId p = parse_property(a.property);

    if (p == PropertyId::CrossSpernerPair) {
        FamilyPair pair = [&] {
            if (!a.in2_path.empty()) {
                FamilyFile f = parse_family(read_text_file(a.in_path));
                FamilyFile g = parse_family(read_text_file(a.in2_path));
                return FamilyPair(std::move(f.family), std::move(g.family));
            }
            return parse_pair(read_text_file(a.in_path));
        }();
        const auto witness = find_cross_violation(pair);
        r.outputs["property"] = property_name(p);
        r.outputs["holds"] = witness ? "false" : "true";
        if (witness) {
            r.exit_code = 1;
            r.outputs["witness"] = mask_to_set_string(witness->first, pair.first.n) + " " +
                                   mask_to_set_string(witness->second, pair.first.n);
            r.text.push_back("violated: " + r.outputs["witness"].get<std::string>());
        } else {
            r.text.push_back("holds");
        }
        return r;
    }

    const FamilyFile file = parse_family(read_text_file(a.in_path));
    const int n = file.family.n;
    int k = a.k >= 0 ? a.k : file.k.value_or(-1);
    if (is_two_part_property(p) && k < 0)
        throw std::invalid_argument("two-part property needs a split: file k or --k");
    if (k < 0) k = 0;
    const GroundSplit split(n, k);

    bool holds;
    std::optional<std::pair<SubsetMask, SubsetMask>> witness;
    if (is_two_part_property(p)) {
        witness = find_violation(p, file.family, split);
        holds = !witness.has_value();
    } else {
        holds = satisfies(p, file.family, split);
        if (!holds) {
            const auto& masks = file.family.masks;
            for (std::size_t i = 0; i < masks.size() && !witness; ++i) {
                if (p == PropertyId::IntersectingStrict && masks[i] == 0)
                    witness = std::make_pair(masks[i], masks[i]);
                for (std::size_t j = i + 1; j < masks.size() && !witness; ++j) {
                    const bool bad =
                        p == PropertyId::Sperner
                            ? (masks[i] & masks[j]) == masks[i] || (masks[i] | masks[j]) == masks[i]
                            : (masks[i] & masks[j]) == 0;
                    if (bad) witness = std::make_pair(masks[i], masks[j]);
                }
            }
        }
    }
    r.outputs["property"] = property_name(p);
    r.outputs["n"] = std::to_string(n);
    if (is_two_part_property(p)) r.outputs["k"] = std::to_string(k);
    r.outputs["holds"] = holds ? "true" : "false";
    if (!holds) {
        r.exit_code = 1;
        if (witness) {
            r.outputs["witness"] = mask_to_set_string(witness->first, n) + " " +
                                   mask_to_set_string(witness->second, n);
            r.text.push_back("violated: " + r.outputs["witness"].get<std::string>());
        } else {
            r.text.push_back("violated");
        }
    } else {
        r.text.push_back("holds");
    }
    return r;
}

// ---------------------------------------------------------------------------
// search
// ---------------------------------------------------------------------------

struct SearchArgs {
    std::string property;
    int n = 0;
    int k = -1;
    int m = 2;
    int threads = 1;
    long long time_limit_ms = 0;
};

CmdResult run_search(const SearchArgs& a) {
    CmdResult r;
    SearchOptions opts;
    opts.threads = a.threads;
    opts.time_limit = std::chrono::milliseconds(a.time_limit_ms);

    SearchResult res;
    if (a.property == "cross-sperner") {
        res = max_cross_sperner_sum(a.n, opts);
        r.outputs["extremal_count"] = std::to_string(res.extremal_count);
    } else if (a.property == "kleitman-union") {
        res = max_union_intersecting(a.n, a.m, opts);
    } else if (a.property == "isp-union") {
        res = max_union_isp_pair(a.n, opts);
    } else {
        const PropertyId p = parse_property(a.property);
        if (a.k < 0) throw std::invalid_argument("search needs --k for two-part properties");
        res = max_independent_set(conflict_graph(p, GroundSplit(a.n, a.k), opts), opts);
    }

    r.outputs["optimum"] = res.optimum.str();
    r.outputs["nodes_explored"] = std::to_string(res.nodes_explored);
    r.outputs["exact"] = res.exact ? "true" : "false";
    if (res.witness_pair) {
        r.outputs["witness_f"] = family_masks_json(res.witness_pair->first);
        r.outputs["witness_g"] = family_masks_json(res.witness_pair->second);
    } else if (!res.witness_parts.empty()) {
        json parts = json::array();
        for (const auto& part : res.witness_parts) parts.push_back(family_masks_json(part));
        r.outputs["witness_parts"] = std::move(parts);
        r.outputs["witness"] = family_masks_json(res.witness);
    } else {
        r.outputs["witness"] = family_masks_json(res.witness);
    }
    r.text.push_back("optimum: " + res.optimum.str());
    std::string wtext = "witness:";
    for (SubsetMask m : res.witness.masks) wtext += " " + mask_to_set_string(m, res.witness.n);
    r.text.push_back(wtext);
    r.text.push_back("nodes: " + std::to_string(res.nodes_explored));
    return r;
}

// ---------------------------------------------------------------------------
// scan
// ---------------------------------------------------------------------------

struct ScanArgs {
    std::string suite;
    int n = 0;
    int threads = 1;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

CmdResult run_scan(const ScanArgs& a) {
    ScanSuite suite;
    if (a.suite == "ms" || a.suite == "marica-schonheim")
        suite = ScanSuite::MaricaSchonheim;
    else if (a.suite == "ad" || a.suite == "ahlswede-daykin")
        suite = ScanSuite::AhlswedeDaykin;
    else if (a.suite == "downclosed")
        suite = ScanSuite::DownclosedIntersecting;
    else if (a.suite == "gkk")
        suite = ScanSuite::GkkLym;
    else
        throw std::invalid_argument("unknown suite: " + a.suite);

    ScanOptions opts;
    opts.threads = a.threads;
    opts.samples = a.samples;
    opts.seed = a.seed;
    const ScanReport rep = run_theorem_scan(suite, a.n, opts);

    CmdResult r;
    r.outputs["suite"] = scan_suite_name(rep.suite);
    r.outputs["n"] = std::to_string(rep.n);
    r.outputs["instances_scanned"] = std::to_string(rep.instances_scanned);
    r.outputs["violations"] = rep.violations;
    r.outputs["extremal_count"] = std::to_string(rep.extremal_count);
    r.text.push_back(std::string(scan_suite_name(rep.suite)) + " n=" + std::to_string(rep.n) +
                     ": scanned " + std::to_string(rep.instances_scanned) + ", violations " +
                     std::to_string(rep.violations.size()) + ", extremal " +
                     std::to_string(rep.extremal_count));
    for (const auto& v : rep.violations) r.text.push_back("violation: " + v);
    if (!rep.violations.empty()) r.exit_code = 1;
    return r;
}

// ---------------------------------------------------------------------------
// bounds
// ---------------------------------------------------------------------------

CmdResult run_bounds(int n_min, int n_max, int m) {
    if (n_min < 2 || n_max < n_min) throw std::invalid_argument("bounds: need 2 <= n-min <= n-max");
    CmdResult r;
    r.columns = {"n", "2I-upper", "2I-equal-construction", "2partSperner", "1I1S",
                 "crossSperner"};
    if (m > 0) r.columns.push_back("kleitman-m" + std::to_string(m));
    for (int n = n_min; n <= n_max; ++n) {
        std::vector<std::string> row;
        row.push_back(std::to_string(n));
        row.push_back(ratio_string(BigRatio(3 * pow2(n), 8)));
        row.push_back(n % 2 == 0 ? ((pow2(n) + 2) / 3).str() : "-");
        row.push_back(binomial(n, (n + 1) / 2).str());
        row.push_back(pow2(n - 2).str());
        row.push_back(pow2(n - 1).str());
        if (m > 0) row.push_back(m <= n ? (pow2(n) - pow2(n - m)).str() : "-");
        r.rows.push_back(std::move(row));
    }
    return r;
}

// ---------------------------------------------------------------------------
// asymptotics
// ---------------------------------------------------------------------------

struct AsymptoticArgs {
    std::string series;
    long long n = 0, i = 0, y = 0, K = 0;
    std::string ns;
    bool modified = false;
    std::string beta = "0";
    std::string terms;
};

CmdResult run_asymptotics(const AsymptoticArgs& a) {
    CmdResult r;
    const auto put_ratio = [&](const std::string& key, const BigRatio& v) {
        r.outputs[key] = ratio_string(v);
        r.outputs[key + "_decimal"] = ratio_decimal(v, 8);
        r.text.push_back(key + ": " + ratio_string(v) + " (" + ratio_decimal(v, 8) + ")");
    };

    if (a.series == "s-profile") {
        const SProfile sp = s_profile(a.n, a.i);
        r.outputs["S"] = sp.s.str();
        r.text.push_back("S: " + sp.s.str());
        put_ratio("ratio", sp.ratio);
    } else if (a.series == "rd") {
        const RatioSeries rs = rd_sequences(a.n, a.i);
        r.columns = {"l", "r_l", "r_l_decimal"};
        for (const auto& [l, term] : rs.terms)
            r.rows.push_back({std::to_string(l), ratio_string(term), ratio_decimal(term, 8)});
        json d = json::array();
        for (const auto& [l, term] : rs.d_terms)
            d.push_back(json{{"l", l}, {"d_l", ratio_string(term)}});
        r.outputs["d_terms"] = std::move(d);
        put_ratio("sum", rs.sum);
    } else if (a.series == "f1") {
        const F1Profile f = f1_profile(a.n);
        r.outputs["F1"] = f.f1.str();
        r.outputs["vandermonde_ok"] = f.vandermonde_ok ? "true" : "false";
        r.text.push_back("F1: " + f.f1.str());
        r.text.push_back(std::string("vandermonde identity: ") +
                         (f.vandermonde_ok ? "holds" : "FAILS"));
        put_ratio("ratio", f.ratio);
    } else if (a.series == "fact3") {
        std::vector<BigRatio> terms;
        std::istringstream in(a.terms);
        std::string tok;
        while (std::getline(in, tok, ',')) terms.push_back(parse_ratio(tok));
        put_ratio("sum_of_squares", fact3_ratio(terms));
    } else if (a.series == "coverage") {
        put_ratio("coverage", coverage_fraction(a.y, a.K));
    } else if (a.series == "ff-coverage") {
        put_ratio("coverage", ff_coverage(a.y, a.i));
    } else if (a.series == "ratio-series") {
        std::vector<long long> ns;
        std::istringstream in(a.ns);
        std::string tok;
        while (std::getline(in, tok, ',')) ns.push_back(std::stoll(tok));
        const auto series = construction_ratio_series(ns, a.modified, parse_ratio(a.beta));
        r.columns = {"n", "count", "ratio", "ratio_decimal"};
        for (const auto& e : series)
            r.rows.push_back({std::to_string(e.n), e.count.str(), ratio_string(e.ratio),
                              ratio_decimal(e.ratio, 8)});
    } else {
        throw std::invalid_argument("unknown series: " + a.series);
    }
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-part extremal set system workbench"};
    app.set_version_flag("--version", std::string("twopart ") + kVersion);
    app.require_subcommand(1);
    app.fallthrough();  // --format / --out may follow the subcommand

    Output out;
    app.add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    std::string out_path;
    app.add_option("--out", out_path, "write the report (or constructed file) to a path");

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "materialize a construction");
    construct->add_option("name", ca.name, "construction name")->required();
    construct->add_option("--n", ca.n, "ground-set size (or part size for partitions)")
        ->required();
    construct->add_option("--k", ca.k, "size of part X1");
    construct->add_option("--i", ca.i, "uniformity level (ff-pair)");
    construct->add_option("--threshold", ca.threshold, "threshold k (cross-sperner)");
    construct->add_option("--star-a", ca.star_a, "star element in X1 (1i1s-product)");
    construct->add_option("--star-b", ca.star_b, "star element in X2 (1i1s-product)");
    construct->add_option("--beta", ca.beta, "replacement window parameter, rational p/q");
    construct->add_flag("--modified", ca.modified, "use the modified canonical partition");
    construct->add_option("--variant", ca.variant,
                          "cross-sperner variant: star-empty | two-stars | threshold");
    construct->add_option("--file-format", ca.file_format, "family file format")
        ->check(CLI::IsMember({"json", "compact"}));

    CheckArgs ka;
    auto* check = app.add_subcommand("check", "check a property of a family file");
    check->add_option("--property", ka.property, "property id")->required();
    check->add_option("--in", ka.in_path, "family (or pair) file")->required();
    check->add_option("--in2", ka.in2_path, "second family file (cross-sperner)");
    check->add_option("--k", ka.k, "split override");

    SearchArgs sa;
    auto* search = app.add_subcommand("search", "exact extremal search");
    search->add_option("--property", sa.property,
                       "2i | 2ps | 2i2s | 1i1s | cross-sperner | kleitman-union | isp-union")
        ->required();
    search->add_option("--n", sa.n, "ground-set size")->required();
    search->add_option("--k", sa.k, "size of part X1");
    search->add_option("--m", sa.m, "family count (kleitman-union)");
    search->add_option("--threads", sa.threads, "worker threads (1 = serial, 0 = all)");
    search->add_option("--time-limit-ms", sa.time_limit_ms, "wall-clock budget, 0 = none");

    ScanArgs na;
    auto* scan = app.add_subcommand("scan", "exhaustive theorem verification");
    scan->add_option("--suite", na.suite, "ms | ad | downclosed | gkk")->required();
    scan->add_option("--n", na.n, "ground-set size")->required();
    scan->add_option("--threads", na.threads, "worker threads (1 = serial, 0 = all)");
    scan->add_option("--samples", na.samples, "sample count (ad beyond n=3)");
    scan->add_option("--seed", na.seed, "sampling seed");

    int b_n = -1, b_min = -1, b_max = -1, b_m = 0;
    auto* bounds = app.add_subcommand("bounds", "tabulate the extremal bound formulas");
    bounds->add_option("--n", b_n, "single n");
    bounds->add_option("--n-min", b_min, "range start");
    bounds->add_option("--n-max", b_max, "range end");
    bounds->add_option("--m", b_m, "add the Kleitman union column for this m");

    AsymptoticArgs aa;
    auto* asym = app.add_subcommand("asymptotics", "exact ratio machinery");
    asym->add_option("--series", aa.series,
                     "s-profile | rd | f1 | fact3 | coverage | ff-coverage | ratio-series")
        ->required();
    asym->add_option("--n", aa.n, "ground-set size");
    asym->add_option("--i", aa.i, "level index");
    asym->add_option("--y", aa.y, "part size");
    asym->add_option("--K", aa.K, "level-window width multiplier");
    asym->add_option("--ns", aa.ns, "comma-separated n list (ratio-series)");
    asym->add_flag("--modified", aa.modified, "modified canonical partition counts");
    asym->add_option("--beta", aa.beta, "replacement window parameter, rational p/q");
    asym->add_option("--terms", aa.terms, "comma-separated rationals (fact3)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        app.exit(e);
        return 2;
    }
    if (!out_path.empty()) out.out_path = out_path;

    const auto started = std::chrono::steady_clock::now();
    try {
        CmdResult r;
        std::string command;
        if (*construct) {
            command = "construct " + ca.name;
            r = run_construct(ca);
            // the artifact goes to --out (report to stdout), or to stdout
            // with the report on stderr
            if (r.file_payload) {
                if (out.out_path) {
                    write_text_file(*out.out_path, *r.file_payload);
                    out.out_path.reset();
                } else {
                    std::cout << *r.file_payload;
                    for (const auto& line : r.text) std::cerr << line << '\n';
                    return 0;
                }
            }
        } else if (*check) {
            command = "check " + ka.property;
            r = run_check(ka);
        } else if (*search) {
            command = "search " + sa.property;
            r = run_search(sa);
        } else if (*scan) {
            command = "scan " + na.suite;
            r = run_scan(na);
        } else if (*bounds) {
            if (b_n >= 0) b_min = b_max = b_n;
            command = "bounds";
            r = run_bounds(b_min, b_max, b_m);
        } else if (*asym) {
            command = "asymptotics " + aa.series;
            r = run_asymptotics(aa);
        }
        const double ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - started)
                              .count();
        emit(r, out, command, ms);
        return r.exit_code;
    } catch (const timeout_error& e) {
        std::cerr << "timeout: " << e.what() << '\n';
        return 4;
    } catch (const resource_limit_error& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
