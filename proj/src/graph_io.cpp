#include "mgi/graph_io.hpp"

#include "mgi/errors.hpp"

namespace mgi {

Rational rational_from_json(const Json& value, const std::string& what)
{
    if (value.is_string())
        return parse_rational(value.get<std::string>());
    if (value.is_number_integer())
        return Rational(Integer(std::to_string(value.get<long long>())));
    throw Error(ErrorKind::Parse, what + " must be a \"p/q\" string");
}

PolarizedMetricGraph graph_from_json(const Json& doc, bool lengths_optional)
{
    if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array())
        throw Error(ErrorKind::Parse, "graph needs a \"vertices\" array");
    if (doc.contains("edges") && !doc["edges"].is_array())
        throw Error(ErrorKind::Parse, "\"edges\" must be an array");

    std::vector<Vertex> vertices;
    for (const auto& v : doc["vertices"]) {
        if (!v.is_object() || !v.contains("id") || !v["id"].is_string())
            throw Error(ErrorKind::Parse, "vertex entry needs a string \"id\"");
        Vertex vertex{v["id"].get<std::string>(), 0};
        if (v.contains("q")) {
            if (!v["q"].is_number_integer())
                throw Error(ErrorKind::Parse, "vertex '" + vertex.id + "': q must be an integer");
            vertex.q = v["q"].get<long>();
        }
        vertices.push_back(std::move(vertex));
    }

    std::vector<Edge> edges;
    if (doc.contains("edges")) {
        for (const auto& e : doc["edges"]) {
            if (!e.is_object() || !e.contains("id") || !e["id"].is_string())
                throw Error(ErrorKind::Parse, "edge entry needs a string \"id\"");
            std::string id = e["id"].get<std::string>();
            if (!e.contains("ends") || !e["ends"].is_array() || e["ends"].size() != 2 || !e["ends"][0].is_string()
                || !e["ends"][1].is_string())
                throw Error(ErrorKind::Parse, "edge '" + id + "': \"ends\" must be two vertex ids");
            Rational length = 1;
            if (e.contains("length"))
                length = rational_from_json(e["length"], "edge '" + id + "' length");
            else if (!lengths_optional)
                throw Error(ErrorKind::Parse, "edge '" + id + "' has no length");
            edges.push_back({id, {e["ends"][0].get<std::string>(), e["ends"][1].get<std::string>()}, length});
        }
    }
    return PolarizedMetricGraph(std::move(vertices), std::move(edges));
}

Json graph_to_json(const PolarizedMetricGraph& g)
{
    Json doc;
    doc["vertices"] = Json::array();
    for (const auto& v : g.vertices())
        doc["vertices"].push_back(Json{{"id", v.id}, {"q", v.q}});
    doc["edges"] = Json::array();
    for (const auto& e : g.edges())
        doc["edges"].push_back(Json{{"id", e.id}, {"ends", {e.ends[0], e.ends[1]}}, {"length", to_string(e.length)}});
    return doc;
}

PolarizedMetricGraph parse_graph(const std::string& text)
{
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::exception& ex) {
        throw Error(ErrorKind::Parse, ex.what());
    }
    return graph_from_json(doc);
}

std::string serialize_graph(const PolarizedMetricGraph& g)
{
    return graph_to_json(g).dump();
}

GraphPoint parse_point(const PolarizedMetricGraph& g, const std::string& text)
{
    GraphPoint point;
    if (text.rfind("vertex:", 0) == 0) {
        point = VertexPoint{text.substr(7)};
    } else if (text.rfind("edge:", 0) == 0) {
        auto at = text.rfind('@');
        if (at == std::string::npos || at < 5)
            throw Error(ErrorKind::UnknownPoint, "expected edge:ID@p/q, got '" + text + "'");
        Rational offset;
        try {
            offset = parse_rational(text.substr(at + 1));
        } catch (const Error&) {
            throw Error(ErrorKind::UnknownPoint, "bad offset in '" + text + "'");
        }
        point = InteriorPoint{text.substr(5, at - 5), offset};
    } else {
        throw Error(ErrorKind::UnknownPoint, "expected vertex:ID or edge:ID@p/q, got '" + text + "'");
    }
    check_point(g, point);
    return point;
}

}  // namespace mgi
