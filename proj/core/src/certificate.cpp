// Copyright 2026 The cdc5 Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cdc5/certificate.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

#include "cdc5/error.hpp"
#include "cdc5/graph6.hpp"

namespace cdc5 {

namespace {

using Json = nlohmann::ordered_json;

Json ids_json(const EdgeSet& s) { return Json(s.ids()); }

const Json& field(const Json& doc, const char* name) {
    if (!doc.contains(name)) throw FormatError(std::string("certificate is missing field '") + name + "'");
    return doc.at(name);
}

std::int64_t int_field(const Json& doc, const char* name) {
    const Json& v = field(doc, name);
    if (!v.is_number_integer()) throw FormatError(std::string("certificate field '") + name + "' is not an integer");
    return v.get<std::int64_t>();
}

// Edge id list -> EdgeSet, rejecting out-of-range ids and duplicates.
EdgeSet id_set(const Json& v, std::size_t m, const std::string& name) {
    if (!v.is_array()) throw FormatError("certificate field '" + name + "' is not an array");
    EdgeSet s(m);
    for (const Json& x : v) {
        if (!x.is_number_integer()) throw FormatError("certificate field '" + name + "' holds a non-integer");
        const auto e = x.get<std::int64_t>();
        if (e < 0 || static_cast<std::size_t>(e) >= m)
            throw FormatError("certificate field '" + name + "' names edge " + std::to_string(e) + " outside 0.." +
                              std::to_string(static_cast<std::int64_t>(m) - 1));
        if (s.test(static_cast<std::size_t>(e)))
            throw FormatError("certificate field '" + name + "' repeats edge " + std::to_string(e));
        s.set(static_cast<std::size_t>(e));
    }
    return s;
}

Json parse_document(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("certificate is not valid JSON: ") + e.what(), e.byte);
    }
}

MultiGraph graph_from(const Json& doc) {
    const std::int64_t n = int_field(doc, "n");
    const std::int64_t m = int_field(doc, "m");
    const Json& edges = field(doc, "edges");
    if (n < 0 || m < 0 || !edges.is_array()) throw FormatError("certificate graph fields are malformed");
    if (static_cast<std::int64_t>(edges.size()) != m)
        throw FormatError("certificate lists " + std::to_string(edges.size()) + " edges but m = " + std::to_string(m));
    std::vector<Edge> list;
    for (const Json& e : edges) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw FormatError("certificate edge entries must be [u, v] pairs");
        const auto u = e[0].get<std::int64_t>();
        const auto v = e[1].get<std::int64_t>();
        if (u < 0 || v < 0 || u >= n || v >= n) throw FormatError("certificate edge endpoint outside 0..n-1");
        list.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    return MultiGraph(static_cast<int>(n), std::move(list));
}

std::set<std::pair<int, int>> adjacency_pairs(const MultiGraph& g) {
    std::set<std::pair<int, int>> out;
    for (const Edge& e : g.edges()) out.emplace(std::min(e.u, e.v), std::max(e.u, e.v));
    return out;
}

}  // namespace

std::string to_json(const Certificate& cert, bool include_timing) {
    Json doc;
    const MultiGraph& g = cert.graph;
    if (g.is_simple() && g.vertex_count() <= graph6_max_vertices)
        doc["graph6"] = write_graph6(g);
    else
        doc["graph6"] = nullptr;
    doc["n"] = g.vertex_count();
    doc["m"] = g.edge_count();
    Json edges = Json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    doc["edges"] = std::move(edges);
    doc["c0"] = ids_json(cert.c0);
    doc["c1"] = ids_json(cert.c1);
    doc["c2"] = ids_json(cert.c2);
    doc["matching"] = ids_json(cert.matching);
    Json cdc = Json::array();
    for (const EdgeSet& s : cert.cdc) cdc.push_back(ids_json(s));
    doc["cdc"] = std::move(cdc);
    doc["coverage"] = verify_cdc(g, cert.cdc).coverage;
    doc["path"] = cert.path;
    doc["stats"] = {{"candidates_tried", cert.stats.candidates_tried},
                    {"elapsed_ms", include_timing ? cert.stats.elapsed_ms : 0}};
    return doc.dump(2) + "\n";
}

Certificate certificate_from_json(std::string_view text) {
    const Json doc = parse_document(text);
    if (!doc.is_object()) throw FormatError("certificate must be a JSON object");
    Certificate cert;
    cert.graph = graph_from(doc);
    const auto m = static_cast<std::size_t>(cert.graph.edge_count());
    cert.c0 = id_set(field(doc, "c0"), m, "c0");
    cert.c1 = id_set(field(doc, "c1"), m, "c1");
    cert.c2 = id_set(field(doc, "c2"), m, "c2");
    cert.matching = id_set(field(doc, "matching"), m, "matching");
    const Json& cdc = field(doc, "cdc");
    if (!cdc.is_array()) throw FormatError("certificate field 'cdc' is not an array");
    for (std::size_t i = 0; i < cdc.size(); ++i) cert.cdc.push_back(id_set(cdc[i], m, "cdc[" + std::to_string(i) + "]"));
    const Json& path = field(doc, "path");
    if (!path.is_string()) throw FormatError("certificate field 'path' is not a string");
    cert.path = path.get<std::string>();
    if (doc.contains("stats") && doc["stats"].is_object()) {
        const Json& st = doc["stats"];
        if (st.contains("candidates_tried") && st["candidates_tried"].is_number_integer())
            cert.stats.candidates_tried = st["candidates_tried"].get<std::uint64_t>();
        if (st.contains("elapsed_ms") && st["elapsed_ms"].is_number_integer())
            cert.stats.elapsed_ms = st["elapsed_ms"].get<std::int64_t>();
    }
    return cert;
}

CertificateCheck verify_certificate_json(std::string_view text) {
    const Json doc = parse_document(text);
    if (!doc.is_object()) throw FormatError("certificate must be a JSON object");
    const Certificate cert = certificate_from_json(text);
    const MultiGraph& g = cert.graph;
    CertificateCheck check;
    auto fail = [&](std::string msg) { check.problems.push_back(std::move(msg)); };

    const Json& g6 = field(doc, "graph6");
    if (g6.is_string()) {
        try {
            const MultiGraph parsed = parse_graph6(g6.get<std::string>());
            if (parsed.vertex_count() != g.vertex_count() || !g.is_simple() || adjacency_pairs(parsed) != adjacency_pairs(g))
                fail("graph6 string does not encode the listed edges");
        } catch (const ParseError& e) {
            fail(std::string("graph6 string is malformed: ") + e.what());
        }
    } else if (!g6.is_null()) {
        throw FormatError("certificate field 'graph6' must be a string or null");
    }

    if (!g.is_cubic()) fail("graph is not cubic");
    if (const EdgeSet b = bridges(g); b.any()) fail("graph has bridge edge " + std::to_string(b.ids().front()));

    if (cert.cdc.size() > 5) fail("cover has " + std::to_string(cert.cdc.size()) + " elements, more than 5");
    const CdcReport report = verify_cdc(g, cert.cdc);
    for (std::size_t i : report.non_even_elements) fail("cdc element " + std::to_string(i) + " is not an even subgraph");
    for (std::size_t i : report.empty_elements) fail("cdc element " + std::to_string(i) + " is empty");
    for (const auto& [e, count] : report.miscovered)
        fail("edge " + std::to_string(e) + " is covered " + std::to_string(count) + " times, expected 2");

    const Json& coverage = field(doc, "coverage");
    if (!coverage.is_array() || coverage.size() != static_cast<std::size_t>(g.edge_count())) {
        fail("stored coverage does not have one entry per edge");
    } else {
        for (std::size_t e = 0; e < coverage.size(); ++e) {
            const Json& c = coverage[e];
            if (!c.is_number_integer() || c.get<std::int64_t>() != 2)
                fail("stored coverage of edge " + std::to_string(e) + " is " + c.dump() + ", expected 2");
            else if (c.get<std::int64_t>() != report.coverage[e])
                fail("stored coverage of edge " + std::to_string(e) + " disagrees with the recount " +
                     std::to_string(report.coverage[e]));
        }
    }

    if (!is_even_subgraph(g, cert.c0)) fail("c0 is not an even subgraph");
    if (!is_even_subgraph(g, cert.c1)) fail("c1 is not an even subgraph");
    if (!is_even_subgraph(g, cert.c2)) fail("c2 is not an even subgraph");
    if (!cert.c0.is_subset_of(cert.c1)) fail("c0 is not contained in c1");
    if (!contains_element_superset(cert.cdc, cert.c0)) fail("no cdc element contains c0");
    for (const EdgeSet* c : {&cert.c1, &cert.c2})
        if (c->any() && std::find(cert.cdc.begin(), cert.cdc.end(), *c) == cert.cdc.end())
            fail(std::string(c == &cert.c1 ? "c1" : "c2") + " is not an element of the cover");

    if (cert.matching != (cert.c1 & cert.c2)) fail("matching differs from c1 ∩ c2");
    if (!is_matching(g, cert.matching)) fail("matching has two edges sharing a vertex");
    if (cert.path != path_theorem2 && cert.path != path_m_empty)
        fail("path must be \"theorem2\" or \"m-empty\", got \"" + cert.path + "\"");
    else if ((cert.path == path_m_empty) != cert.matching.none())
        fail("path \"" + cert.path + "\" does not fit a matching of size " + std::to_string(cert.matching.count()));

    if (g.is_cubic() && is_matching(g, cert.matching)) {
        const EdgeDeletion reduced = delete_edges(g, cert.matching);
        const auto flow = find_nz4flow(reduced.graph);
        if (!flow || !verify_flow(reduced.graph, *flow)) fail("G - M has no nowhere-zero 4-flow");
    }
    return check;
}

}  // namespace cdc5
