#include "arcpat/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "arcpat/enumerate.hpp"
#include "arcpat/formulas.hpp"
#include "arcpat/verify.hpp"

namespace arcpat::cli {

using json = nlohmann::ordered_json;

// ------------------------------------------------------------------ cache

Cache::Cache(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    if (!in) return;
    try {
        json j = json::parse(in);
        for (auto& [k, v] : j.at("entries").items()) entries_[k] = v.get<std::string>();
    } catch (const std::exception& e) {
        throw Error(ErrorKind::parse, "unreadable cache file " + path_ + ": " + e.what());
    }
}

std::string Cache::key(const std::string& family, const std::string& avoid, int n, int k) {
    return family + "|" + avoid + "|" + std::to_string(n) + "|" + std::to_string(k);
}

std::optional<std::string> Cache::get(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void Cache::put(const std::string& key, const std::string& value) {
    auto& slot = entries_[key];
    if (slot != value) dirty_ = true;
    slot = value;
}

std::vector<std::string> Cache::keys() const {
    std::vector<std::string> out;
    for (const auto& [k, v] : entries_) out.push_back(k);
    return out;
}

void Cache::erase(const std::string& key) { dirty_ = entries_.erase(key) > 0 || dirty_; }

void Cache::save() const {
    namespace fs = std::filesystem;
    json j;
    j["format"] = "arcpat-cache-1";
    j["entries"] = json::object();
    for (const auto& [k, v] : entries_) j["entries"][k] = v;
    fs::path target(path_);
    fs::path tmp = target;
    tmp += ".tmp." + std::to_string(std::random_device{}());
    {
        std::ofstream outf(tmp);
        if (!outf) throw Error(ErrorKind::invalid, "cannot write cache file " + tmp.string());
        outf << j.dump(2) << "\n";
    }
    fs::rename(tmp, target);
}

// --------------------------------------------------------------- commands

namespace {

struct Context {
    std::ostream& out;
    std::ostream& err;
    std::string format = "json";
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    RunManifest manifest;
    std::optional<Cache> cache;

    void stop_clock() { manifest.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); }
};

json manifest_json(const RunManifest& m) {
    json j;
    j["command"] = m.command;
    j["parameters"] = json::object();
    for (const auto& [k, v] : m.parameters) j["parameters"][k] = v;
    j["version"] = m.version;
    j["wall_seconds"] = m.wall_seconds;
    j["cache_hits"] = m.cache_hits;
    j["cache_spot_check"] = m.cache_spot_check;
    return j;
}

void emit_json(Context& c, const json& result) {
    c.stop_clock();
    json j;
    j["result"] = result;
    j["manifest"] = manifest_json(c.manifest);
    c.out << j.dump(2) << "\n";
}

// CSV goes to stdout; the manifest follows on stderr.
void emit_csv(Context& c, const std::vector<std::vector<std::string>>& rows) {
    c.stop_clock();
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            const std::string& cell = row[i];
            const bool quote = cell.find_first_of(",\"\n") != std::string::npos;
            if (i) c.out << ',';
            if (!quote) {
                c.out << cell;
                continue;
            }
            c.out << '"';
            for (char ch : cell) c.out << (ch == '"' ? "\"\"" : std::string(1, ch));
            c.out << '"';
        }
        c.out << "\n";
    }
    c.err << manifest_json(c.manifest).dump() << "\n";
}

Perm parse_perm(const std::string& text) {
    Perm p;
    if (text.find(',') == std::string::npos) {
        for (char ch : text) {
            if (ch < '1' || ch > '9') throw Error(ErrorKind::parse, "bad permutation '" + text + "'");
            p.push_back(ch - '0');
        }
    } else {
        std::stringstream ss(text);
        std::string part;
        while (std::getline(ss, part, ',')) {
            try {
                p.push_back(std::stoi(part));
            } catch (const std::exception&) {
                throw Error(ErrorKind::parse, "bad permutation '" + text + "'");
            }
        }
    }
    if (standardize(p) != p) throw Error(ErrorKind::parse, "'" + text + "' is not a permutation of 1..n");
    return p;
}

void spot_check(Context& c) {
    if (!c.cache) return;
    auto keys = c.cache->keys();
    if (keys.empty()) return;
    std::mt19937_64 rng(std::random_device{}());
    const std::string key = keys[std::uniform_int_distribution<size_t>(0, keys.size() - 1)(rng)];
    std::vector<std::string> parts;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, '|')) parts.push_back(part);
    std::optional<std::uint64_t> fresh;
    try {
        if (parts.size() == 4)
            fresh = count_total(parse_family(parts[0]), std::stoi(parts[2]), parse_pattern_set(parts[1]), std::stoi(parts[3]));
    } catch (const std::exception&) {
    }
    if (fresh && c.cache->get(key) == std::to_string(*fresh)) {
        c.manifest.cache_spot_check = "ok";
    } else {
        c.err << json{{"warning", "cache entry disagrees with recomputation; dropped"}, {"key", key}}.dump() << "\n";
        c.cache->erase(key);
        c.manifest.cache_spot_check = "mismatch";
    }
}

struct CountArgs {
    std::string family;
    int n = 0;
    int k = 0;
    std::string avoid;
    bool by_shape = false;
    std::string stat;
    int shards = 1;
};

int cmd_count(Context& c, const CountArgs& a) {
    const Family family = parse_family(a.family);
    const PatternSet avoid = parse_pattern_set(a.avoid);
    if (!a.stat.empty() && a.stat != "valleys") throw Error(ErrorKind::parse, "unknown statistic '" + a.stat + "'");
    CountOptions o;
    o.k = a.k;
    o.by_shape = a.by_shape;
    o.by_valleys = a.stat == "valleys";
    o.shards = std::max(1, a.shards);
    c.manifest.parameters = {{"family", a.family}, {"n", std::to_string(a.n)}, {"k", std::to_string(a.k)},
                             {"avoid", to_string(avoid)}, {"by_shape", a.by_shape ? "true" : "false"},
                             {"stat", a.stat}};

    // Before the lookup, so a dropped entry is recomputed rather than served.
    spot_check(c);
    CountTable t;
    const std::string key = Cache::key(to_string(family), to_string(avoid), a.n, a.k);
    std::optional<std::string> cached;
    if (c.cache && !o.by_shape && !o.by_valleys) cached = c.cache->get(key);
    if (cached) {
        ++c.manifest.cache_hits;
        t.family = family;
        t.n = a.n;
        t.k = a.k;
        t.avoid = avoid;
        t.total = std::stoull(*cached);
    } else {
        t = count(family, a.n, avoid, o);
        if (c.cache) c.cache->put(key, std::to_string(t.total));
    }

    if (c.format == "csv") {
        std::vector<std::vector<std::string>> rows = {{"family", "n", "k", "avoid", "total"},
                                                      {to_string(family), std::to_string(a.n), std::to_string(a.k),
                                                       to_string(avoid), std::to_string(t.total)}};
        if (o.by_valleys) {
            rows.push_back({"valleys", "count"});
            for (auto [v, n] : t.by_valleys) rows.push_back({std::to_string(v), std::to_string(n)});
        }
        if (o.by_shape) {
            rows.push_back({"border", "count"});
            for (const auto& [b, n] : t.by_shape) rows.push_back({b, std::to_string(n)});
        }
        emit_csv(c, rows);
        return ok;
    }
    json r;
    r["family"] = to_string(family);
    r["n"] = std::to_string(a.n);
    r["k"] = std::to_string(a.k);
    r["avoid"] = json::array();
    for (const auto& p : avoid) r["avoid"].push_back(p.str());
    r["total"] = std::to_string(t.total);
    r["by_valleys"] = json::object();
    for (auto [v, n] : t.by_valleys) r["by_valleys"][std::to_string(v)] = std::to_string(n);
    r["by_shape"] = json::array();
    for (const auto& [b, n] : t.by_shape) r["by_shape"].push_back({{"border", b}, {"count", std::to_string(n)}});
    emit_json(c, r);
    return ok;
}

int cmd_series(Context& c, const std::string& formula, int order, int k) {
    const FormulaId id = parse_formula(formula);
    c.manifest.parameters = {{"formula", formula}, {"order", std::to_string(order)}, {"k", std::to_string(k)}};
    auto values = coefficients(id, order, k);
    if (c.format == "csv") {
        std::vector<std::vector<std::string>> rows = {{"n", "coefficient"}};
        for (size_t i = 0; i < values.size(); ++i) rows.push_back({std::to_string(i), values[i].get_str()});
        emit_csv(c, rows);
        return ok;
    }
    json r;
    r["formula"] = to_string(id);
    r["order"] = std::to_string(order);
    r["coefficients"] = json::array();
    for (const auto& v : values) r["coefficients"].push_back(v.get_str());
    emit_json(c, r);
    return ok;
}

int cmd_cross_check(Context& c, const std::string& formula, int max_n, int k) {
    const FormulaId id = parse_formula(formula);
    c.manifest.parameters = {{"formula", formula}, {"max_n", std::to_string(max_n)}, {"k", std::to_string(k)}};
    auto report = cross_check(id, max_n, k);
    if (c.format == "csv") {
        std::vector<std::vector<std::string>> rows = {{"n", "formula", "oracle", "equal"}};
        for (const auto& row : report.rows)
            rows.push_back({std::to_string(row.n), row.formula.get_str(), row.oracle.get_str(), row.equal ? "true" : "false"});
        emit_csv(c, rows);
    } else {
        json r;
        r["id"] = to_string(id);
        r["results"] = json::array();
        for (const auto& row : report.rows)
            r["results"].push_back(
                {{"n", std::to_string(row.n)}, {"formula", row.formula.get_str()}, {"oracle", row.oracle.get_str()}, {"equal", row.equal}});
        emit_json(c, r);
    }
    return report.ok() ? ok : verification_failed;
}

int cmd_verify(Context& c, const std::string& suite, int max_n, int max_partition) {
    if (max_partition < 0) max_partition = max_n;
    c.manifest.parameters = {{"suite", suite}, {"max_n", std::to_string(max_n)}, {"max_n_partitions", std::to_string(max_partition)}};
    Report report = run_suite(suite, max_n, max_partition);
    if (c.format == "csv") {
        std::vector<std::vector<std::string>> rows = {{"suite", "check", "passed", "detail"}};
        for (const auto& ch : report.checks) rows.push_back({ch.suite, ch.name, ch.passed ? "true" : "false", ch.detail});
        emit_csv(c, rows);
    } else {
        json r;
        r["suite"] = suite;
        r["passed"] = report.ok();
        r["checks"] = json::array();
        for (const auto& ch : report.checks)
            r["checks"].push_back({{"suite", ch.suite}, {"name", ch.name}, {"passed", ch.passed}, {"detail", ch.detail}});
        emit_json(c, r);
    }
    return report.ok() ? ok : verification_failed;
}

json pair_json(const NoncrossingPathPair& p) { return {{"bottom", p.bottom.steps}, {"top", p.top.steps}}; }

json placement_json(const RookPlacement& p) {
    json rows = json::array();
    for (int r : p.rows) rows.push_back(std::to_string(r));
    return {{"encoding", p.encode()}, {"border", p.board.border.steps}, {"rooks", rows}};
}

int cmd_map(Context& c, const std::string& map, const std::string& input, const std::string& tau) {
    c.manifest.parameters = {{"input", input}};
    if (!tau.empty()) c.manifest.parameters["tau"] = tau;
    json output;
    std::string flat;
    if (map == "delta321" || map == "delta321-switch" || map == "delta213") {
        auto p = RookPlacement::parse(input);
        auto pair = map == "delta321" ? delta321(p) : map == "delta321-switch" ? delta321_by_switch(p) : delta213(p);
        output = pair_json(pair);
        flat = pair.encode();
    } else if (map == "delta213-inv") {
        auto p = delta213_inv(NoncrossingPathPair::parse(input));
        output = placement_json(p);
        flat = p.encode();
    } else if (map == "pi") {
        auto x = pi_labeling(RookPlacement::parse(input));
        json labels = json::array();
        for (int a : x.labels) labels.push_back(std::to_string(a));
        output = {{"path", x.path.steps}, {"labels", labels}};
        flat = x.encode();
    } else if (map == "kappa-prime") {
        if (tau.empty()) throw Error(ErrorKind::parse, "kappa-prime needs --tau");
        auto p = kappa_prime(Matching::parse(input), Pattern::parse(tau));
        output = placement_json(p);
        flat = p.encode();
    } else if (map == "chi") {
        auto p = chi(parse_perm(input));
        output = placement_json(p);
        flat = p.encode();
    }
    if (c.format == "csv") {
        emit_csv(c, {{"map", "input", "output"}, {map, input, flat}});
        return ok;
    }
    emit_json(c, {{"map", map}, {"input", input}, {"output", output}});
    return ok;
}

int error_exit(std::ostream& err, const char* kind, const std::string& message, int code) {
    err << json{{"error", kind}, {"message", message}}.dump() << "\n";
    return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Pattern avoidance in matchings and set partitions"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    app.fallthrough();
    Context ctx{out, err, "json", std::chrono::steady_clock::now(), {}, std::nullopt};
    app.add_option("--format", ctx.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

    CountArgs count_args;
    auto* count_cmd = app.add_subcommand("count", "Count avoiding objects by brute force");
    count_cmd->add_option("--family", count_args.family, "matching, partition, placement, permutation, minimal-placement, fixed-matching, dyck, path-pair")
        ->required();
    count_cmd->add_option("--n", count_args.n, "Size")->required()->check(CLI::NonNegativeNumber);
    count_cmd->add_option("--k", count_args.k, "Fixed points / trailing south steps")->check(CLI::NonNegativeNumber);
    count_cmd->add_option("--avoid", count_args.avoid, "Comma-separated patterns");
    count_cmd->add_flag("--by-shape", count_args.by_shape, "Break down by border");
    count_cmd->add_option("--stat", count_args.stat, "Break down by a statistic (valleys)");
    count_cmd->add_option("--shards", count_args.shards, "Parallel shards")->check(CLI::PositiveNumber);

    std::string formula;
    int order = 0, series_k = 0;
    auto* series_cmd = app.add_subcommand("series", "Coefficients of a generating function");
    series_cmd->add_option("--formula", formula, "Formula id")->required();
    series_cmd->add_option("--order", order, "Highest power of z")->required()->check(CLI::NonNegativeNumber);
    series_cmd->add_option("--k", series_k, "Parameter k (dnk_pairs)")->check(CLI::NonNegativeNumber);

    std::string cc_formula;
    int cc_max = 0, cc_k = 0;
    auto* cc_cmd = app.add_subcommand("cross-check", "Compare a generating function with brute force");
    cc_cmd->add_option("--formula", cc_formula, "Formula id")->required();
    cc_cmd->add_option("--max-n", cc_max, "Largest n")->required()->check(CLI::NonNegativeNumber);
    cc_cmd->add_option("--k", cc_k, "Parameter k (dnk_pairs)")->check(CLI::NonNegativeNumber);

    std::string suite;
    int max_n = 4, max_partition = -1;
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("--suite", suite, "Suite")->required()->check(CLI::IsMember(suite_names()));
    verify_cmd->add_option("--max-n", max_n, "Largest size")->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--max-n-partitions", max_partition, "Largest partition size (default: --max-n)")
        ->check(CLI::NonNegativeNumber);

    std::string map_input, map_tau;
    std::vector<std::pair<std::string, CLI::App*>> maps;
    const std::vector<std::pair<std::string, std::string>> map_specs = {
        {"delta321", "--placement"}, {"delta321-switch", "--placement"}, {"delta213", "--placement"},
        {"delta213-inv", "--pair"},  {"pi", "--placement"},              {"kappa-prime", "--matching"},
        {"chi", "--perm"}};
    for (const auto& [name, flag] : map_specs) {
        auto* sub = app.add_subcommand(name, "Apply the " + name + " map");
        sub->add_option(flag, map_input, "Input object")->required();
        if (name == "kappa-prime") sub->add_option("--tau", map_tau, "321, 213 or 123")->required();
        maps.emplace_back(name, sub);
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return usage;
    }

    ctx.manifest.command = app.get_subcommands().front()->get_name();
    int code = ok;
    try {
        if (const char* path = std::getenv(kCacheEnv); path && *path && count_cmd->parsed()) ctx.cache.emplace(path);
        if (count_cmd->parsed())
            code = cmd_count(ctx, count_args);
        else if (series_cmd->parsed())
            code = cmd_series(ctx, formula, order, series_k);
        else if (cc_cmd->parsed())
            code = cmd_cross_check(ctx, cc_formula, cc_max, cc_k);
        else if (verify_cmd->parsed())
            code = cmd_verify(ctx, suite, max_n, max_partition);
        else
            for (const auto& [name, sub] : maps)
                if (sub->parsed()) code = cmd_map(ctx, name, map_input, map_tau);
        if (ctx.cache && ctx.cache->dirty()) ctx.cache->save();
    } catch (const Error& e) {
        switch (e.kind()) {
            case ErrorKind::resource_cap: return error_exit(err, "resource_cap", e.what(), resource_cap);
            case ErrorKind::precondition: return error_exit(err, "precondition", e.what(), usage);
            case ErrorKind::parse: return error_exit(err, "parse", e.what(), usage);
            default: return error_exit(err, "invalid", e.what(), usage);
        }
    } catch (const std::exception& e) {
        return error_exit(err, "internal", e.what(), usage);
    }
    return code;
}

}  // namespace arcpat::cli
