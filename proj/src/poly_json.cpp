#include "rgrec/poly_json.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rgrec/errors.hpp"

namespace rgrec {

using ordered_json = nlohmann::ordered_json;

std::string to_canonical_json(const LaurentPoly& p)
{
    ordered_json doc;
    doc["nvars"] = p.nvars();
    ordered_json terms = ordered_json::array();
    for (const auto& [e, c] : p.terms()) {
        ordered_json term;
        term["exp"] = std::vector<int>(e.view().begin(), e.view().end());
        term["coeff"] = c.to_string();
        terms.push_back(std::move(term));
    }
    doc["terms"] = std::move(terms);
    return doc.dump();
}

LaurentPoly from_json(const std::string& text)
{
    try {
        const auto doc = nlohmann::json::parse(text);
        const auto nvars = doc.at("nvars").get<std::size_t>();
        LaurentPoly p(nvars);
        for (const auto& term : doc.at("terms")) {
            const auto exps = term.at("exp").get<std::vector<int>>();
            if (exps.size() != nvars) throw ParseError("exponent vector length does not match nvars");
            ExponentVector e(nvars);
            for (std::size_t i = 0; i < nvars; ++i) e[i] = exps[i];
            p.add_term(e, BigRational::parse(term.at("coeff").get<std::string>()));
        }
        return p;
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("malformed polynomial JSON: ") + ex.what());
    }
}

void write_poly_file(const std::filesystem::path& path, const LaurentPoly& p)
{
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    // Replaced atomically via rename.
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write " + tmp);
        out << to_canonical_json(p) << '\n';
    }
    std::filesystem::rename(tmp, path);
}

LaurentPoly read_poly_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json(buf.str());
}

}  // namespace rgrec
