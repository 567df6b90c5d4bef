#include "schottky/config_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace schottky {

namespace {

    using nlohmann::json;

    double finite_number(const json& j, const std::string& where)
    {
        if (!j.is_number())
            throw parse_error(where + ": expected a number");
        const double x = j.get<double>();
        if (!std::isfinite(x))
            throw parse_error(where + ": number must be finite");
        return x;
    }

    Complex complex_pair(const json& j, const std::string& where)
    {
        if (!j.is_array() || j.size() != 2)
            throw parse_error(where + ": expected [re, im]");
        return { finite_number(j[0], where + "[0]"), finite_number(j[1], where + "[1]") };
    }

    std::string full_precision(double x)
    {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", x);
        return buf;
    }

} // namespace

NamedConfig parse_config(const std::string& json_text)
{
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw parse_error(std::string("config: ") + e.what());
    }

    if (!doc.is_object())
        throw parse_error("config: top-level document must be an object");
    if (!doc.contains("chains"))
        throw parse_error("config: missing \"chains\" array");
    const json& chains = doc["chains"];
    if (!chains.is_array())
        throw parse_error("config: \"chains\" must be an array");
    if (chains.size() < 2)
        throw parse_error("config: at least 2 chains required");

    NamedConfig out;
    out.config.generators.reserve(chains.size());
    for (std::size_t i = 0; i < chains.size(); ++i) {
        const std::string where = "chains[" + std::to_string(i) + "]";
        const json& chain = chains[i];
        if (!chain.is_object())
            throw parse_error(where + ": expected an object");
        for (const char* key : { "center_zeta", "center_v", "lambda" })
            if (!chain.contains(key))
                throw parse_error(where + ": missing \"" + key + "\"");
        const Complex center_zeta = complex_pair(chain["center_zeta"], where + ".center_zeta");
        const double center_v = finite_number(chain["center_v"], where + ".center_v");
        const Complex lambda = complex_pair(chain["lambda"], where + ".lambda");
        if (lambda == Complex { 0.0, 0.0 })
            throw parse_error(where + ".lambda: must be nonzero");
        out.config.generators.emplace_back(BoundaryPoint { center_zeta, center_v }, lambda);
    }

    if (doc.contains("metadata")) {
        const json& meta = doc["metadata"];
        if (!meta.is_object())
            throw parse_error("config: \"metadata\" must be an object");
        if (meta.contains("name"))
            out.metadata.name = meta["name"].get<std::string>();
        if (meta.contains("description"))
            out.metadata.description = meta["description"].get<std::string>();
    }

    out.config.validity = validate(out.config);
    return out;
}

NamedConfig load_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw parse_error("config: cannot read " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

std::string config_to_json(const SchottkyConfig& cfg, const ConfigMetadata& metadata)
{
    // Hand-rolled emission: json's double formatting is shortest-roundtrip,
    // which is fine, but a fixed %.17g keeps the output byte-stable across
    // library versions.
    std::ostringstream out;
    out << "{\n";
    if (!metadata.name.empty() || !metadata.description.empty()) {
        out << "  \"metadata\": " << json { { "name", metadata.name }, { "description", metadata.description } }.dump()
            << ",\n";
    }
    out << "  \"chains\": [\n";
    for (std::size_t i = 0; i < cfg.generators.size(); ++i) {
        const ReflectionGenerator& g = cfg.generators[i];
        out << "    {\"center_zeta\": [" << full_precision(g.center().zeta().real()) << ", "
            << full_precision(g.center().zeta().imag()) << "], \"center_v\": "
            << full_precision(g.center().v()) << ", \"lambda\": ["
            << full_precision(g.lambda().real()) << ", " << full_precision(g.lambda().imag())
            << "]}";
        out << (i + 1 < cfg.generators.size() ? ",\n" : "\n");
    }
    out << "  ]\n}\n";
    return out.str();
}

void save_config(const SchottkyConfig& cfg, const std::filesystem::path& path,
    const ConfigMetadata& metadata)
{
    std::ofstream out(path);
    if (!out)
        throw parse_error("config: cannot write " + path.string());
    out << config_to_json(cfg, metadata);
}

} // namespace schottky
