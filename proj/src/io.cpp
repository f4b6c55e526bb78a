#include "imb/io.hpp"

#include "imb/errors.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <string>

namespace imb {

namespace {

// Lines are whitespace-tokenized; blank lines are permitted between records.
std::vector<std::string> next_record(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t)
            toks.push_back(t);
        if (!toks.empty())
            return toks;
    }
    return {};
}

long long parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size())
            throw ParseError("bad " + what + ": '" + s + "'");
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("bad " + what + ": '" + s + "'");
    }
}

BigInt parse_big(const std::string& s, const std::string& what) {
    if (s.empty() || !std::all_of(s.begin(), s.end(),
                                  [](unsigned char c) { return std::isdigit(c); }))
        throw ParseError("bad " + what + ": '" + s + "'");
    return BigInt(s);
}

} // namespace

GraphFile parse_graph(std::istream& in) {
    auto header = next_record(in);
    if (header.size() != 3 || header[0] != "graph")
        throw ParseError("expected header 'graph <n> <m>'");
    long long n = parse_int(header[1], "vertex count");
    long long m = parse_int(header[2], "edge count");
    if (n < 1 || m < 0)
        throw ParseError("invalid graph header counts");
    if (n > 1000000)
        throw ParseError("explicit graphs are capped at 10^6 vertices");

    std::vector<std::pair<int, int>> edges;
    std::optional<TwinCover> cover;
    for (long long i = 0; i < m; ++i) {
        auto rec = next_record(in);
        if (rec.size() != 3 || rec[0] != "e")
            throw ParseError("expected edge line 'e <u> <v>'");
        long long u = parse_int(rec[1], "edge endpoint");
        long long v = parse_int(rec[2], "edge endpoint");
        if (u < 1 || v > n || u >= v)
            throw ParseError("edge endpoints must satisfy 1 <= u < v <= n");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    auto rec = next_record(in);
    if (!rec.empty()) {
        if (rec[0] != "cover")
            throw ParseError("unexpected line starting with '" + rec[0] + "'");
        std::vector<int> ids;
        for (std::size_t i = 1; i < rec.size(); ++i) {
            long long v = parse_int(rec[i], "cover id");
            if (v < 1 || v > n)
                throw ParseError("cover id out of range");
            ids.push_back(static_cast<int>(v));
        }
        try {
            cover = TwinCover(std::move(ids));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
        if (!next_record(in).empty())
            throw ParseError("trailing content after cover line");
    }

    try {
        return GraphFile{Graph(static_cast<int>(n), std::move(edges)), std::move(cover)};
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

void write_graph(const Graph& g, const std::optional<TwinCover>& cover,
                 std::ostream& out) {
    out << "graph " << g.n << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges)
        out << "e " << u << ' ' << v << '\n';
    if (cover) {
        out << "cover";
        for (int v : cover->members)
            out << ' ' << v;
        out << '\n';
    }
}

SuccinctGraph parse_succinct(std::istream& in) {
    auto header = next_record(in);
    if (header.size() != 3 || header[0] != "succinct")
        throw ParseError("expected header 'succinct <k> <r>'");
    long long k = parse_int(header[1], "cover size");
    long long r = parse_int(header[2], "clique count");
    if (k < 0 || r < 0)
        throw ParseError("invalid succinct header counts");

    SuccinctGraph sg;
    sg.k = static_cast<int>(k);

    auto rec = next_record(in);
    while (!rec.empty() && rec[0] == "he") {
        if (rec.size() != 3)
            throw ParseError("expected cover edge line 'he <u> <v>'");
        long long u = parse_int(rec[1], "cover edge endpoint");
        long long v = parse_int(rec[2], "cover edge endpoint");
        if (u < 1 || v > k || u >= v)
            throw ParseError("cover edge endpoints must satisfy 1 <= u < v <= k");
        sg.cover_edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        rec = next_record(in);
    }
    std::sort(sg.cover_edges.begin(), sg.cover_edges.end());
    if (std::adjacent_find(sg.cover_edges.begin(), sg.cover_edges.end()) !=
        sg.cover_edges.end())
        throw ParseError("duplicate cover edge");

    for (long long i = 0; i < r; ++i) {
        if (rec.empty() || rec[0] != "c")
            throw ParseError("expected clique line 'c <size> <t> <ids...>'");
        if (rec.size() < 3)
            throw ParseError("clique line too short");
        SuccinctClique c;
        c.size = parse_big(rec[1], "clique size");
        if (c.size < 1)
            throw ParseError("clique size must be positive");
        long long t = parse_int(rec[2], "attachment count");
        if (t < 0 || static_cast<std::size_t>(t) != rec.size() - 3)
            throw ParseError("attachment count does not match the line");
        for (long long j = 0; j < t; ++j) {
            long long a = parse_int(rec[3 + j], "attachment id");
            if (a < 1 || a > k)
                throw ParseError("attachment id out of range 1..k");
            c.attachments.push_back(static_cast<int>(a));
        }
        std::sort(c.attachments.begin(), c.attachments.end());
        if (std::adjacent_find(c.attachments.begin(), c.attachments.end()) !=
            c.attachments.end())
            throw ParseError("duplicate attachment id");
        sg.cliques.push_back(std::move(c));
        rec = next_record(in);
    }
    if (!rec.empty())
        throw ParseError("trailing content after clique lines");
    return sg;
}

void write_succinct(const SuccinctGraph& sg, std::ostream& out) {
    out << "succinct " << sg.k << ' ' << sg.r() << '\n';
    auto edges = sg.cover_edges;
    std::sort(edges.begin(), edges.end());
    for (auto [u, v] : edges)
        out << "he " << u << ' ' << v << '\n';
    for (const auto& c : sg.cliques) {
        out << "c " << c.size.str() << ' ' << c.attachments.size();
        for (int a : c.attachments)
            out << ' ' << a;
        out << '\n';
    }
}

Certificate parse_certificate(std::istream& in) {
    auto pi = next_record(in);
    if (pi.empty() || pi[0] != "pi")
        throw ParseError("expected line 'pi <ids...>'");
    auto loc = next_record(in);
    if (loc.empty() || loc[0] != "loc")
        throw ParseError("expected line 'loc <values...>'");
    if (!next_record(in).empty())
        throw ParseError("trailing content after certificate");

    Certificate cert;
    for (std::size_t i = 1; i < pi.size(); ++i)
        cert.cover_order.push_back(
            static_cast<int>(parse_int(pi[i], "cover order id")));
    for (std::size_t i = 1; i < loc.size(); ++i)
        cert.locations.push_back(static_cast<int>(parse_int(loc[i], "location")));
    return cert;
}

void write_certificate(const Certificate& cert, std::ostream& out) {
    out << "pi";
    for (int v : cert.cover_order)
        out << ' ' << v;
    out << "\nloc";
    for (int v : cert.locations)
        out << ' ' << v;
    out << '\n';
}

std::string sniff_format(std::istream& in) {
    auto pos = in.tellg();
    std::string tok;
    in >> tok;
    in.clear();
    in.seekg(pos);
    if (tok == "graph" || tok == "succinct")
        return tok;
    throw ParseError("unrecognized instance format (expected 'graph' or 'succinct')");
}

GraphFile gen_random(int n, int k, int max_clique, std::uint64_t seed) {
    if (n < 1 || k < 0 || k > n || max_clique < 1)
        throw std::invalid_argument("gen_random: need 1 <= n, 0 <= k <= n, max_clique >= 1");

    std::mt19937_64 rng(seed);
    SuccinctGraph sg;
    sg.k = k;
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
            if (rng() & 1u)
                sg.cover_edges.emplace_back(i, j);

    int remaining = n - k;
    while (remaining > 0) {
        int cap = std::min(max_clique, remaining);
        int size = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(cap));
        SuccinctClique c;
        c.size = size;
        for (int v = 1; v <= k; ++v)
            if (rng() & 1u)
                c.attachments.push_back(v);
        sg.cliques.push_back(std::move(c));
        remaining -= size;
    }

    auto [g, cover] = expand_succinct(sg, n);
    return GraphFile{std::move(g), std::move(cover)};
}

SuccinctGraph compress_to_succinct(const Graph& g, const TwinCover& cover) {
    Decomposition d = validate_twin_cover(g, cover);
    SuccinctGraph sg;
    sg.k = cover.k();
    auto cover_index = [&](int v) {
        auto it = std::lower_bound(cover.members.begin(), cover.members.end(), v);
        return static_cast<int>(it - cover.members.begin()) + 1;
    };
    for (int i = 0; i < sg.k; ++i)
        for (int j = i + 1; j < sg.k; ++j)
            if (g.has_edge(cover.members[i], cover.members[j]))
                sg.cover_edges.emplace_back(i + 1, j + 1);
    for (const auto& c : d.cliques) {
        SuccinctClique sc;
        sc.size = c.size();
        for (int v : c.clique_type)
            sc.attachments.push_back(cover_index(v));
        std::sort(sc.attachments.begin(), sc.attachments.end());
        sg.cliques.push_back(std::move(sc));
    }
    return sg;
}

} // namespace imb
