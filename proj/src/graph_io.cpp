#include "hylag/graph_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hylag {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string fmt_double_exact(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write file: " + path);
    out << content;
    if (!out) throw InputError("write failed: " + path);
}

Hypergraph parse_graph_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("graph file is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("r") || !j.contains("n") || !j.contains("edges"))
        throw InputError("graph file must be an object with keys r, n, edges");
    try {
        int r = j.at("r").get<int>();
        int n = j.at("n").get<int>();
        std::vector<Edge> edges;
        for (const auto& je : j.at("edges")) {
            Edge e;
            for (const auto& v : je) e.push_back(v.get<int>());
            edges.push_back(std::move(e));
        }
        return Hypergraph(r, n, std::move(edges));
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed graph file: ") + e.what());
    }
}

Hypergraph read_graph_json(const std::string& path) {
    return parse_graph_json(read_text_file(path));
}

std::string graph_to_json(const Hypergraph& g, const std::string& manifest_json) {
    std::ostringstream os;
    os << "{\"r\": " << g.r() << ", \"n\": " << g.n() << ", \"edges\": [";
    const auto& edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i) os << ", ";
        os << "[";
        for (std::size_t k = 0; k < edges[i].size(); ++k) {
            if (k) os << ", ";
            os << edges[i][k];
        }
        os << "]";
    }
    os << "]";
    if (!manifest_json.empty()) os << ", \"manifest\": " << manifest_json;
    os << "}\n";
    return os.str();
}

void write_graph_json(const Hypergraph& g, const std::string& path,
                      const std::string& manifest_json) {
    write_text_file(path, graph_to_json(g, manifest_json));
}

std::string solve_report_to_json(const SolveReport& rep, const std::string& manifest_json) {
    std::ostringstream os;
    os << "{\"lambda\": " << fmt_double_exact(rep.lambda_estimate) << ", \"weights\": [";
    const auto& w = rep.weighting.values();
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ", ";
        os << fmt_double_exact(w[i]);
    }
    os << "], \"kkt_residual\": " << fmt_double_exact(rep.kkt_residual)
       << ", \"restarts_used\": " << rep.restarts_used << ", \"iterations\": " << rep.iterations
       << ", \"converged\": " << (rep.converged ? "true" : "false")
       << ", \"seed\": " << rep.seed;
    if (!manifest_json.empty()) os << ", \"manifest\": " << manifest_json;
    os << "}\n";
    return os.str();
}

SolveReport parse_solve_report_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("report file is not valid JSON: ") + e.what());
    }
    try {
        std::vector<double> weights = j.at("weights").get<std::vector<double>>();
        return SolveReport{j.at("lambda").get<double>(),
                           Weighting(std::move(weights)),
                           j.at("kkt_residual").get<double>(),
                           j.at("restarts_used").get<int>(),
                           j.value("iterations", std::int64_t{0}),
                           j.at("converged").get<bool>(),
                           j.at("seed").get<std::uint64_t>()};
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed report file: ") + e.what());
    }
}

SolveReport read_solve_report_json(const std::string& path) {
    return parse_solve_report_json(read_text_file(path));
}

std::string extract_manifest_json(const std::string& file_text) {
    // CSV reports carry "# manifest: {...}" as their first line
    if (!file_text.empty() && file_text[0] == '#') {
        std::istringstream is(file_text);
        std::string line;
        while (std::getline(is, line)) {
            const std::string tag = "# manifest: ";
            if (line.rfind(tag, 0) == 0) return line.substr(tag.size());
            if (!line.empty() && line[0] != '#') break;
        }
        return "";
    }
    try {
        nlohmann::json j = nlohmann::json::parse(file_text);
        if (j.is_object() && j.contains("manifest")) return j.at("manifest").dump();
    } catch (const nlohmann::json::exception&) {
    }
    return "";
}

}  // namespace hylag
