#include "stardec/json_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>

#include "stardec/errors.hpp"

namespace stardec::io {

namespace {

std::int64_t as_int(const json& j, const std::string& what) {
    if (j.is_number_unsigned()) {
        const auto u = j.get<std::uint64_t>();
        if (u > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
            throw InputError(what + ": integer out of range");
        return static_cast<std::int64_t>(u);
    }
    if (!j.is_number_integer()) throw InputError(what + ": expected an integer");
    return j.get<std::int64_t>();
}

const json& member(const json& j, const char* key, const std::string& what) {
    if (!j.is_object()) throw InputError(what + ": expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw InputError(what + ": missing key \"" + key + "\"");
    return *it;
}

int parse_vertex_key(const std::string& key, int n, const std::string& what) {
    int v = 0;
    const char* first = key.data();
    const char* last = first + key.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    // Insist on the canonical spelling: "01" and "1" must not silently name
    // the same vertex.
    if (ec != std::errc() || ptr != last || std::to_string(v) != key)
        throw InputError(what + ": key \"" + key + "\" is not a vertex id");
    if (v < 0 || v >= n)
        throw InputError(what + ": vertex " + key + " out of range [0," + std::to_string(n) + ")");
    return v;
}

}  // namespace

json parse_text(const std::string& text, const std::string& origin) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw InputError(origin + ": not valid JSON");
    return j;
}

json parse_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str(), path);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

IntMultiset multiset_from_json(const json& j, const std::string& what) {
    if (!j.is_array()) throw InputError(what + ": expected an array");
    IntMultiset m;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const json& e = j[i];
        const std::string at = what + "[" + std::to_string(i) + "]";
        if (e.is_array()) {
            if (e.size() != 2)
                throw InputError(at + ": run-length entries are [value,count] pairs");
            const std::int64_t value = as_int(e[0], at + " value");
            const std::int64_t count = as_int(e[1], at + " count");
            if (value < 1) throw InputError(at + ": values must be >= 1");
            if (count < 1) throw InputError(at + ": counts must be >= 1");
            m.add(value, count);
        } else {
            const std::int64_t value = as_int(e, at);
            if (value < 1) throw InputError(at + ": values must be >= 1");
            m.add(value);
        }
    }
    return m;
}

json multiset_to_json(const IntMultiset& m) {
    json out = json::array();
    const auto runs = static_cast<std::int64_t>(m.runs().size());
    if (2 * runs < m.size()) {
        for (const auto& [value, count] : m.runs()) out.push_back(json::array({value, count}));
    } else {
        for (std::int64_t value : m.expanded()) out.push_back(value);
    }
    return out;
}

Multigraph multigraph_from_json(const json& j) {
    const std::int64_t n = as_int(member(j, "n", "graph"), "graph n");
    if (n < 1) throw InputError("graph n: must be >= 1");
    if (j.contains("lambda")) {
        if (j.contains("edges"))
            throw InputError("graph: give either \"lambda\" or \"edges\", not both");
        const std::int64_t lambda = as_int(j.at("lambda"), "graph lambda");
        if (lambda < 1) throw InputError("graph lambda: must be >= 1");
        return Multigraph::complete(lambda, n);
    }
    const json& edges = member(j, "edges", "graph");
    if (!edges.is_array()) throw InputError("graph edges: expected an array");
    Multigraph g(n);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const json& e = edges[i];
        const std::string at = "graph edges[" + std::to_string(i) + "]";
        if (!e.is_array() || (e.size() != 2 && e.size() != 3))
            throw InputError(at + ": expected [u,v] or [u,v,mult]");
        const std::int64_t u = as_int(e[0], at + " u");
        const std::int64_t v = as_int(e[1], at + " v");
        const std::int64_t mult = e.size() == 3 ? as_int(e[2], at + " mult") : 1;
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InputError(at + ": vertex out of range [0," + std::to_string(n) + ")");
        g.add_edges(static_cast<int>(u), static_cast<int>(v), mult);
    }
    return g;
}

json multigraph_to_json(const Multigraph& g) {
    json out = json::object();
    out["n"] = g.n();
    if (g.is_complete()) {
        out["lambda"] = g.lambda();
        return out;
    }
    json edges = json::array();
    g.for_each_pair([&](int u, int v, std::int64_t mult) {
        edges.push_back(json::array({u, v, mult}));
    });
    out["edges"] = std::move(edges);
    return out;
}

CenterSpec centers_from_json(const json& j, int n) {
    if (!j.is_object()) throw InputError("centers: expected an object keyed by vertex id");
    CenterSpec spec;
    spec.centers.resize(static_cast<std::size_t>(n));
    for (const auto& [key, value] : j.items()) {
        const int v = parse_vertex_key(key, n, "centers");
        spec.centers[static_cast<std::size_t>(v)] =
            multiset_from_json(value, "centers[\"" + key + "\"]");
    }
    return spec;
}

json centers_to_json(const CenterSpec& spec) {
    json out = json::object();
    for (std::size_t v = 0; v < spec.centers.size(); ++v) {
        if (spec.centers[v].empty()) continue;
        out[std::to_string(v)] = multiset_to_json(spec.centers[v]);
    }
    return out;
}

DecompInstance instance_from_json(const json& j) {
    DecompInstance inst;
    inst.lambda = as_int(member(j, "lambda", "instance"), "instance lambda");
    const std::int64_t n = as_int(member(j, "n", "instance"), "instance n");
    if (n < 1 || n > std::numeric_limits<int>::max())
        throw InputError("instance n: out of range");
    inst.n = static_cast<int>(n);
    inst.sizes = multiset_from_json(member(j, "sizes", "instance"), "instance sizes");
    return inst;
}

json instance_to_json(const DecompInstance& inst) {
    json out = json::object();
    out["lambda"] = inst.lambda;
    out["n"] = inst.n;
    out["sizes"] = multiset_to_json(inst.sizes);
    return out;
}

std::vector<Star> stars_from_json(const json& j, int n) {
    if (!j.is_array()) throw InputError("stars: expected an array");
    std::vector<Star> stars;
    stars.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string at = "stars[" + std::to_string(i) + "]";
        const json& e = j[i];
        Star s;
        const std::int64_t c = as_int(member(e, "center", at), at + " center");
        if (c < 0 || c >= n)
            throw InputError(at + ": center out of range [0," + std::to_string(n) + ")");
        s.center = static_cast<int>(c);
        const json& leaves = member(e, "leaves", at);
        if (!leaves.is_array()) throw InputError(at + " leaves: expected an array");
        for (std::size_t k = 0; k < leaves.size(); ++k) {
            const std::int64_t v = as_int(leaves[k], at + " leaves[" + std::to_string(k) + "]");
            if (v < 0 || v >= n)
                throw InputError(at + ": leaf out of range [0," + std::to_string(n) + ")");
            s.leaves.push_back(static_cast<int>(v));
        }
        std::sort(s.leaves.begin(), s.leaves.end());
        stars.push_back(std::move(s));
    }
    return stars;
}

json stars_to_json(const std::vector<Star>& stars) {
    json out = json::array();
    for (const Star& s : stars) {
        json js = json::object();
        js["center"] = s.center;
        js["leaves"] = s.leaves;
        out.push_back(std::move(js));
    }
    return out;
}

json certificate_to_json(const RestrictionFunction& f, const DeltaReport& report) {
    json out = json::object();
    out["f"] = f.f;
    out["demand"] = report.minus;
    out["capacity"] = report.plus;
    out["delta"] = report.delta;
    return out;
}

TournamentSpec tournament_spec_from_json(const json& j) {
    TournamentSpec spec;
    spec.lambda = as_int(member(j, "lambda", "tournament"), "tournament lambda");
    const json& a = member(j, "a", "tournament");
    const json& b = member(j, "b", "tournament");
    if (!a.is_array() || !b.is_array())
        throw InputError("tournament: \"a\" and \"b\" must be arrays");
    for (std::size_t i = 0; i < a.size(); ++i)
        spec.a.push_back(as_int(a[i], "tournament a[" + std::to_string(i) + "]"));
    for (std::size_t i = 0; i < b.size(); ++i)
        spec.b.push_back(as_int(b[i], "tournament b[" + std::to_string(i) + "]"));
    return spec;
}

Tournament tournament_from_json(const json& j) {
    Tournament t;
    t.lambda = as_int(member(j, "lambda", "orientation"), "orientation lambda");
    const json& out = member(j, "out", "orientation");
    if (!out.is_array()) throw InputError("orientation out: expected a square matrix");
    t.n = static_cast<int>(out.size());
    for (std::size_t u = 0; u < out.size(); ++u) {
        const std::string at = "orientation out[" + std::to_string(u) + "]";
        if (!out[u].is_array() || out[u].size() != out.size())
            throw InputError(at + ": expected a row of length " + std::to_string(out.size()));
        std::vector<std::int64_t> row;
        for (std::size_t v = 0; v < out[u].size(); ++v)
            row.push_back(as_int(out[u][v], at + "[" + std::to_string(v) + "]"));
        t.out.push_back(std::move(row));
    }
    return t;
}

json tournament_to_json(const Tournament& t) {
    json out = json::object();
    out["n"] = t.n;
    out["lambda"] = t.lambda;
    out["out"] = t.out;
    return out;
}

ThreePartition partition_from_json(const json& j) {
    if (!j.is_array()) throw InputError("partition: expected an array of integers");
    ThreePartition tp;
    for (std::size_t i = 0; i < j.size(); ++i)
        tp.values.push_back(as_int(j[i], "partition[" + std::to_string(i) + "]"));
    return tp;
}

ThreePartition partition_from_text(const std::string& text) {
    ThreePartition tp;
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        const std::size_t from = token.find_first_not_of(" \t");
        const std::size_t to = token.find_last_not_of(" \t");
        if (from == std::string::npos)
            throw InputError("partition: empty entry in \"" + text + "\"");
        token = token.substr(from, to - from + 1);
        std::int64_t v = 0;
        const char* first = token.data();
        const char* last = first + token.size();
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || ptr != last)
            throw InputError("partition: \"" + token + "\" is not an integer");
        tp.values.push_back(v);
    }
    if (tp.values.empty()) throw InputError("partition: no values in \"" + text + "\"");
    return tp;
}

json hard_odd_to_json(const HardOddParams& par) {
    json params = json::object();
    params["parity"] = "odd";
    params["lambda"] = par.lambda;
    params["q"] = par.q;
    params["class_sum"] = par.a;
    params["n"] = par.n;
    params["m"] = par.m;
    params["b2"] = par.b2;
    params["b_sizes"] = multiset_to_json(par.B);
    json out = json::object();
    out["params"] = std::move(params);
    out["instance"] = instance_to_json(par.instance());
    return out;
}

json hard_even_to_json(const HardEvenParams& par) {
    json params = json::object();
    params["parity"] = "even";
    params["lambda"] = par.lambda;
    params["q"] = par.q;
    params["class_sum"] = par.a;
    params["n"] = par.n;
    params["m"] = par.m;
    params["r"] = par.r;
    params["c"] = par.c;
    params["b"] = par.b;
    params["x"] = par.x;
    params["p"] = par.p;
    json out = json::object();
    out["params"] = std::move(params);
    out["instance"] = instance_to_json(par.instance());
    return out;
}

}  // namespace stardec::io
