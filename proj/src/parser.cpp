#include "twcy/parser.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "twcy/errors.hpp"

namespace twcy {

namespace {

using nlohmann::json;

struct Ctx {
    std::string source;
    [[noreturn]] void fail(const std::string& where, const std::string& what) const
    {
        throw InputError(source + ":" + where + ": " + what);
    }
};

Rational read_rational(const Ctx& ctx, const json& v, const std::string& where)
{
    if (v.is_number_integer())
        return Rational(v.get<long long>());
    if (!v.is_string())
        ctx.fail(where, "malformed rational: expected a \"p/q\" string");
    try {
        return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument&) {
        ctx.fail(where, "malformed rational '" + v.get<std::string>() + "'");
    }
}

Matrix read_matrix(const Ctx& ctx, const json& doc, const std::string& key, std::size_t n)
{
    std::string where = "/" + key;
    if (!doc.contains(key))
        ctx.fail(where, "missing matrix");
    const json& rows = doc[key];
    if (!rows.is_array() || (n && rows.size() != n) || rows.empty())
        ctx.fail(where, "expected a square matrix" + (n ? " of size " + std::to_string(n) : std::string()));
    std::size_t size = rows.size();
    Matrix m(size, size);
    for (std::size_t i = 0; i < size; ++i) {
        std::string rw = where + "/" + std::to_string(i);
        if (!rows[i].is_array() || rows[i].size() != size)
            ctx.fail(rw, "expected a row of length " + std::to_string(size));
        for (std::size_t j = 0; j < size; ++j)
            m.set(i, j, read_rational(ctx, rows[i][j], rw + "/" + std::to_string(j)));
    }
    return m;
}

std::vector<std::string> read_generators(const Ctx& ctx, const json& doc, std::size_t expected)
{
    if (!doc.contains("generators"))
        return default_generator_names(static_cast<int>(expected));
    const json& g = doc["generators"];
    if (!g.is_array())
        ctx.fail("/generators", "expected a list of names");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (!g[i].is_string() || g[i].get<std::string>().empty())
            ctx.fail("/generators/" + std::to_string(i), "expected a nonempty name");
        std::string name = g[i].get<std::string>();
        for (const auto& o : out)
            if (o == name)
                ctx.fail("/generators/" + std::to_string(i), "duplicate generator '" + name + "'");
        out.push_back(name);
    }
    if (expected && out.size() != expected)
        ctx.fail("/generators", "expected " + std::to_string(expected) + " names");
    return out;
}

std::string qname(std::size_t i, std::size_t j)
{
    return "q" + std::to_string(i + 1) + std::to_string(j + 1);
}

}  // namespace

PresentationFile parse_presentation(const std::string& text, const std::string& source)
{
    Ctx ctx{source};
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        ctx.fail("byte " + std::to_string(e.byte), "syntax error");
    }
    if (!doc.is_object())
        ctx.fail("/", "expected an object");
    if (!doc.contains("family") || !doc["family"].is_string())
        ctx.fail("/family", "missing family");
    PresentationFile pf;
    pf.family = doc["family"].get<std::string>();
    if (pf.family == "quantum-affine") {
        Matrix q = read_matrix(ctx, doc, "q", 0);
        std::size_t n = q.rows();
        for (std::size_t i = 0; i < n; ++i) {
            if (q.at(i, i) != 1)
                ctx.fail("/q/" + std::to_string(i) + "/" + std::to_string(i), qname(i, i) + " must be 1");
            for (std::size_t j = i + 1; j < n; ++j)
                if (q.at(i, j) * q.at(j, i) != 1)
                    ctx.fail("/q/" + std::to_string(i) + "/" + std::to_string(j),
                             qname(i, j) + "=" + to_string(q.at(i, j)) + ", " + qname(j, i) + "=" +
                                 to_string(q.at(j, i)) + ": " + qname(i, j) + "*" + qname(j, i) + " != 1");
        }
        pf.presentation = quantum_affine(q, read_generators(ctx, doc, n));
        pf.q = q;
    } else if (pf.family == "dimension-2-M") {
        Matrix m = read_matrix(ctx, doc, "M", 2);
        if (m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0) == 0)
            ctx.fail("/M", "singular matrix (determinant 0)");
        pf.presentation = dimension2_m(m, read_generators(ctx, doc, 2));
        pf.m = m;
    } else if (pf.family == "quadratic") {
        auto names = read_generators(ctx, doc, 0);
        if (names.empty())
            ctx.fail("/generators", "at least one generator is required");
        std::size_t n = names.size();
        if (!doc.contains("relations") || !doc["relations"].is_array())
            ctx.fail("/relations", "expected a list of relations");
        QuadraticPresentation p;
        p.family = "quadratic";
        p.generators = names;
        auto index_of = [&](const json& v, const std::string& where) -> long {
            if (v.is_string())
                for (std::size_t i = 0; i < n; ++i)
                    if (names[i] == v.get<std::string>())
                        return static_cast<long>(i);
            ctx.fail(where, "unknown generator");
        };
        const json& rels = doc["relations"];
        for (std::size_t r = 0; r < rels.size(); ++r) {
            std::string rw = "/relations/" + std::to_string(r);
            if (!rels[r].is_array())
                ctx.fail(rw, "expected a list of [left, right, coefficient] terms");
            SparseVector rel;
            for (std::size_t t = 0; t < rels[r].size(); ++t) {
                std::string tw = rw + "/" + std::to_string(t);
                const json& term = rels[r][t];
                if (!term.is_array() || term.size() != 3)
                    ctx.fail(tw, "expected [left, right, coefficient]");
                long idx = index_of(term[0], tw + "/0") * static_cast<long>(n) + index_of(term[1], tw + "/1");
                Rational c = read_rational(ctx, term[2], tw + "/2");
                rel[idx] += c;
                if (rel[idx] == 0)
                    rel.erase(idx);
            }
            p.relations.push_back(rel);
        }
        try {
            p.validate();
        } catch (const InputError& e) {
            ctx.fail("/relations", e.what());
        }
        pf.presentation = p;
    } else {
        ctx.fail("/family", "unknown family '" + pf.family + "'");
    }
    if (doc.contains("options")) {
        const json& o = doc["options"];
        if (!o.is_object())
            ctx.fail("/options", "expected an object");
        for (const char* key : {"cutoff", "dim"}) {
            if (!o.contains(key))
                continue;
            if (!o[key].is_number_integer() || o[key].get<long long>() < (std::string(key) == "dim" ? 1 : 0))
                ctx.fail(std::string("/options/") + key, std::string(key) == "dim" ? "expected a positive integer" : "expected a nonnegative integer");
            (std::string(key) == "dim" ? pf.dim : pf.cutoff) = o[key].get<int>();
        }
    }
    return pf;
}

PresentationFile parse_presentation_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError(path + ": cannot read file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_presentation(ss.str(), path);
}

}  // namespace twcy
