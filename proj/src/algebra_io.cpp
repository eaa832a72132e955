#include "acaa/algebra_io.hpp"

#include <fstream>
#include <set>

#include "acaa/error.hpp"

namespace acaa {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

json const &member(json const &j, char const *key, std::string const &where)
{
    if (!j.is_object() || !j.contains(key))
        throw ParseError(where + ": missing \"" + key + "\"");
    return j.at(key);
}

std::size_t index_from_json(json const &j, std::size_t dim, std::string const &where)
{
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw ParseError(where + ": expected a non-negative integer index");
    auto const v = j.get<std::size_t>();
    if (v >= dim)
        throw ParseError(where + ": index " + std::to_string(v) + " out of range for dim " +
                         std::to_string(dim));
    return v;
}

} // namespace

FieldSpec field_from_json(json const &j)
{
    auto const &type = member(j, "type", "field");
    if (type == "Q")
        return FieldSpec::rationals();
    if (type == "Fp") {
        auto const &p = member(j, "p", "field");
        if (!p.is_number_unsigned())
            throw ParseError("field.p: expected a positive integer");
        try {
            return FieldSpec::prime(p.get<std::uint64_t>());
        } catch (PreconditionError const &e) {
            throw ParseError(std::string("field.p: ") + e.what());
        }
    }
    throw ParseError("field.type: expected \"Q\" or \"Fp\"");
}

ordered_json field_to_json(FieldSpec f)
{
    if (f.is_rational())
        return {{"type", "Q"}};
    return {{"type", "Fp"}, {"p", f.modulus()}};
}

Scalar scalar_from_json(FieldSpec f, json const &j, std::string const &where)
{
    try {
        if (j.is_string())
            return Scalar::parse(f, j.get<std::string>());
        if (j.is_number_integer())
            return Scalar(f, static_cast<long>(j.get<long long>()));
    } catch (Error const &e) {
        throw ParseError(where + ": " + e.what());
    }
    throw ParseError(where + ": expected a rational string or integer");
}

Algebra algebra_from_json(json const &j)
{
    if (!j.is_object())
        throw ParseError("algebra: expected a JSON object");
    FieldSpec const field = field_from_json(member(j, "field", "algebra"));
    auto const &dim_j = member(j, "dim", "algebra");
    if (!dim_j.is_number_unsigned())
        throw ParseError("dim: expected a non-negative integer");
    auto const dim = dim_j.get<std::size_t>();
    if (dim > 64)
        throw ParseError("dim: " + std::to_string(dim) + " exceeds the supported maximum 64");

    Symmetry sym = Symmetry::None;
    if (j.contains("symmetry")) {
        auto const &s = j.at("symmetry");
        if (s == "skew")
            sym = Symmetry::Skew;
        else if (s != "none")
            throw ParseError("symmetry: expected \"none\" or \"skew\"");
    }

    std::vector<Scalar> t(dim * dim * dim, Scalar::zero(field));
    std::set<std::pair<std::size_t, std::size_t>> seen;
    if (j.contains("products")) {
        auto const &products = j.at("products");
        if (!products.is_array())
            throw ParseError("products: expected an array");
        for (std::size_t n = 0; n < products.size(); ++n) {
            std::string const where = "products[" + std::to_string(n) + "]";
            auto const &p = products[n];
            auto const l = index_from_json(member(p, "left", where), dim, where + ".left");
            auto const r = index_from_json(member(p, "right", where), dim, where + ".right");
            if (sym == Symmetry::Skew && l >= r)
                throw ParseError(where + ": skew algebras list only left < right");
            if (!seen.insert({l, r}).second)
                throw ParseError(where + ": duplicate product (" + std::to_string(l) + "," +
                                 std::to_string(r) + ")");
            auto const &value = member(p, "value", where);
            if (!value.is_object())
                throw ParseError(where + ".value: expected an object");
            for (auto const &[key, coeff] : value.items()) {
                std::string const vw = where + ".value[\"" + key + "\"]";
                std::size_t k = 0;
                try {
                    std::size_t used = 0;
                    k = std::stoul(key, &used);
                    if (used != key.size())
                        throw std::invalid_argument(key);
                } catch (std::exception const &) {
                    throw ParseError(vw + ": key is not an index");
                }
                if (k >= dim)
                    throw ParseError(vw + ": index out of range");
                Scalar const s = scalar_from_json(field, coeff, vw);
                t[(l * dim + r) * dim + k] = s;
                if (sym == Symmetry::Skew)
                    t[(r * dim + l) * dim + k] = -s;
            }
        }
    }

    Algebra A(field, dim, std::move(t), sym);
    if (j.contains("name")) {
        if (!j.at("name").is_string())
            throw ParseError("name: expected a string");
        A = A.with_name(j.at("name").get<std::string>());
    }
    if (j.contains("basis")) {
        auto const &b = j.at("basis");
        if (!b.is_array() || b.size() != dim)
            throw ParseError("basis: expected " + std::to_string(dim) + " labels");
        std::vector<std::string> labels;
        for (auto const &l : b) {
            if (!l.is_string())
                throw ParseError("basis: labels must be strings");
            labels.push_back(l.get<std::string>());
        }
        A = A.with_labels(std::move(labels));
    }
    return A;
}

ordered_json algebra_to_json(Algebra const &A)
{
    ordered_json j;
    if (!A.name().empty())
        j["name"] = A.name();
    j["field"] = field_to_json(A.field());
    j["dim"] = A.dim();
    if (A.labels())
        j["basis"] = *A.labels();
    bool const skew = A.symmetry() == Symmetry::Skew;
    j["symmetry"] = skew ? "skew" : "none";
    ordered_json products = ordered_json::array();
    for (std::size_t l = 0; l < A.dim(); ++l)
        for (std::size_t r = skew ? l + 1 : 0; r < A.dim(); ++r) {
            ordered_json value = ordered_json::object();
            for (std::size_t k = 0; k < A.dim(); ++k)
                if (!A.c(l, r, k).is_zero())
                    value[std::to_string(k)] = A.c(l, r, k).to_string();
            if (!value.empty())
                products.push_back({{"left", l}, {"right", r}, {"value", value}});
        }
    j["products"] = products;
    return j;
}

Algebra load_algebra(std::filesystem::path const &path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError(path.string() + ": cannot open");
    json j;
    try {
        j = json::parse(in);
    } catch (json::parse_error const &e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    try {
        return algebra_from_json(j);
    } catch (ParseError const &e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

void save_algebra(Algebra const &A, std::filesystem::path const &path)
{
    std::ofstream out(path);
    if (!out)
        throw Error(path.string() + ": cannot write");
    out << algebra_to_json(A).dump(2) << '\n';
}

Matrix matrix_from_json(FieldSpec f, json const &j, std::string const &where)
{
    if (!j.is_array())
        throw ParseError(where + ": expected an array of rows");
    std::vector<Vector> rows;
    for (std::size_t r = 0; r < j.size(); ++r) {
        if (!j[r].is_array())
            throw ParseError(where + "[" + std::to_string(r) + "]: expected a row array");
        Vector row;
        for (std::size_t c = 0; c < j[r].size(); ++c)
            row.push_back(scalar_from_json(f, j[r][c],
                                           where + "[" + std::to_string(r) + "][" +
                                               std::to_string(c) + "]"));
        if (!rows.empty() && row.size() != rows.front().size())
            throw ParseError(where + ": ragged matrix rows");
        rows.push_back(std::move(row));
    }
    return Matrix(f, rows);
}

ordered_json matrix_to_json(Matrix const &m)
{
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(m(r, c).to_string());
        rows.push_back(row);
    }
    return rows;
}

} // namespace acaa
