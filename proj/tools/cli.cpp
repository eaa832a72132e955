#include "cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "acaa/algebra.hpp"
#include "acaa/algebra_io.hpp"
#include "acaa/catalog.hpp"
#include "acaa/cohomology.hpp"
#include "acaa/enumerate.hpp"
#include "acaa/error.hpp"
#include "acaa/free_acaa.hpp"
#include "acaa/identities.hpp"
#include "acaa/operad.hpp"
#include "acaa/representation.hpp"
#include "acaa/sampler.hpp"
#include "acaa/series.hpp"

namespace acaa::cli {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

enum class Status { Holds, Fails, Value };

char const *status_name(Status s)
{
    switch (s) {
    case Status::Holds: return "holds";
    case Status::Fails: return "fails";
    case Status::Value: return "value";
    }
    return "?";
}

struct CommandReport {
    std::string command;
    Status status = Status::Value;
    std::optional<std::vector<std::string>> witness; // basis labels
    json payload = json::object();
    std::optional<double> elapsed;
};

struct Globals {
    std::string format = "text";
    std::uint64_t seed = 1;
    std::size_t samples = 20;
    unsigned jobs = 1;
    std::string out;
    bool timing = false;
};

std::string text_value(json const &v)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](json const &e) { return e.is_string(); })) {
        std::string s;
        for (auto const &e : v)
            s += (s.empty() ? "" : ", ") + e.get<std::string>();
        return s;
    }
    return v.dump();
}

std::string witness_text(std::vector<std::string> const &w)
{
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i)
        s += (i ? "," : "") + w[i];
    return s + ")";
}

void render(CommandReport const &r, std::string const &format, std::ostream &os)
{
    if (format == "json") {
        json j;
        j["command"] = r.command;
        j["status"] = status_name(r.status);
        j["witness"] = r.witness ? json(*r.witness) : json(nullptr);
        j["payload"] = r.payload;
        if (r.elapsed) {
            std::ostringstream t;
            t << std::fixed << std::setprecision(3) << *r.elapsed;
            j["elapsed_seconds"] = t.str();
        }
        os << j.dump(2) << "\n";
        return;
    }
    os << r.command << ": " << status_name(r.status) << "\n";
    if (r.witness)
        os << "  witness: " << witness_text(*r.witness) << "\n";
    for (auto it = r.payload.begin(); it != r.payload.end(); ++it)
        os << "  " << it.key() << ": " << text_value(it.value()) << "\n";
    if (r.elapsed)
        os << "  elapsed: " << std::fixed << std::setprecision(3) << *r.elapsed << "s\n";
}

std::vector<std::string> labels_of(Algebra const &A, std::vector<std::size_t> const &idx)
{
    std::vector<std::string> out;
    for (auto i : idx)
        out.push_back(A.label(i));
    return out;
}

void fail_with(CommandReport &r, Algebra const &A, Witness const &w)
{
    r.status = Status::Fails;
    r.witness = labels_of(A, w.indices);
    r.payload["law"] = w.law;
    r.payload["residual"] = format_element(A, w.residual);
}

void apply_check(CommandReport &r, Algebra const &A, CheckResult const &c)
{
    if (c.holds())
        r.status = Status::Holds;
    else
        fail_with(r, A, *c.witness());
}

std::vector<std::string> split_csv(std::string const &s)
{
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, ','))
        parts.push_back(cur);
    if (!s.empty() && s.back() == ',')
        parts.emplace_back();
    return parts;
}

Algebra resolve_algebra(std::string const &ref)
{
    if (fs::exists(ref))
        return load_algebra(ref);
    if (auto e = catalog_lookup(ref))
        return e->algebra;
    if (ref == "ex7")
        return seven_dim_example();
    if (ref == "simple3")
        return simple_lie3();
    if (ref.size() > 4 && ref.starts_with("free") &&
        std::all_of(ref.begin() + 4, ref.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        return free_acaa(std::stoul(ref.substr(4))).algebra();
    throw ParseError(ref + ": no such file or named algebra");
}

Vector parse_element(Algebra const &A, std::string const &text)
{
    auto parts = split_csv(text);
    if (parts.size() != A.dim())
        throw ParseError("--element: expected " + std::to_string(A.dim()) + " coordinates, got " +
                         std::to_string(parts.size()));
    Vector v;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        try {
            v.push_back(Scalar::parse(A.field(), parts[i]));
        } catch (Error const &e) {
            throw ParseError("--element[" + std::to_string(i) + "]: " + e.what());
        }
    }
    return v;
}

// Label, or 1-based index.
std::size_t parse_basis(Algebra const &A, std::string const &text)
{
    for (std::size_t i = 0; i < A.dim(); ++i)
        if (A.label(i) == text)
            return i;
    try {
        std::size_t pos = 0;
        unsigned long k = std::stoul(text, &pos);
        if (pos == text.size() && k >= 1 && k <= A.dim())
            return k - 1;
    } catch (std::exception const &) {
    }
    throw ParseError("--basis: no basis vector '" + text + "'");
}

json fingerprint_json(Fingerprint const &fp)
{
    json j;
    j["dim"] = fp.dim;
    j["derived_dim"] = fp.derived_dim;
    j["ann_dim"] = fp.ann_dim;
    j["cube_dim"] = fp.cube_dim;
    return j;
}

json cochain_json(MultilinearMap const &m)
{
    json j;
    j["arity"] = m.arity();
    j["dim"] = m.dim();
    j["field"] = field_to_json(m.field());
    json vals = json::array();
    for (auto const &s : m.values())
        vals.push_back(s.to_string());
    j["values"] = vals;
    return j;
}

json representation_json(std::string const &source, Representation const &rep)
{
    json j;
    j["source"] = source;
    j["target_dim"] = rep.target_dim();
    json imgs = json::array();
    for (auto const &m : rep.images())
        imgs.push_back(matrix_to_json(m));
    j["images"] = imgs;
    return j;
}

Representation load_representation(std::string const &path, std::string &source)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError(path + ": cannot open");
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (nlohmann::json::parse_error const &e) {
        throw ParseError(path + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("source") || !j["source"].is_string())
        throw ParseError(path + ": source: expected a string");
    if (!j.contains("target_dim") || !j["target_dim"].is_number_unsigned())
        throw ParseError(path + ": target_dim: expected a non-negative integer");
    if (!j.contains("images") || !j["images"].is_array())
        throw ParseError(path + ": images: expected an array of matrices");
    source = j["source"].get<std::string>();
    // Relative algebra paths are resolved next to the representation file.
    std::string ref = source;
    fs::path beside = fs::path(path).parent_path() / source;
    if (!fs::exists(ref) && fs::exists(beside))
        ref = beside.string();
    Algebra A = resolve_algebra(ref);
    std::vector<Matrix> images;
    auto const &arr = j["images"];
    for (std::size_t i = 0; i < arr.size(); ++i)
        images.push_back(matrix_from_json(A.field(), arr[i], path + ": images[" + std::to_string(i) + "]"));
    return Representation(A, j["target_dim"].get<std::size_t>(), std::move(images));
}

void write_json_file(std::string const &path, json const &j)
{
    std::ofstream o(path);
    if (!o)
        throw ParseError(path + ": cannot write");
    o << j.dump(2) << "\n";
}

// Degrees from free-style labels: X1 -> 1, X12 -> 2, X1_2_3 -> 3.
std::optional<std::vector<int>> degrees_from_labels(Algebra const &A)
{
    if (!A.labels())
        return std::nullopt;
    std::vector<int> deg;
    for (auto const &l : *A.labels()) {
        if (l.size() < 2 || l[0] != 'X')
            return std::nullopt;
        std::string body = l.substr(1);
        int d = body.find('_') != std::string::npos
                    ? static_cast<int>(std::count(body.begin(), body.end(), '_')) + 1
                    : static_cast<int>(body.size());
        deg.push_back(d);
    }
    return deg;
}

std::vector<std::size_t> first_nonzero_args(MultilinearMap const &m)
{
    std::size_t d = m.dim(), k = m.arity();
    std::vector<std::size_t> args(k, 0);
    std::size_t total = 1;
    for (std::size_t i = 0; i < k; ++i)
        total *= d;
    for (std::size_t c = 0; c < total; ++c) {
        std::size_t rest = c;
        for (std::size_t i = k; i-- > 0;) {
            args[i] = rest % d;
            rest /= d;
        }
        if (!is_zero(m.at(args)))
            return args;
    }
    return {};
}

} // namespace

int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
    Globals g;
    CLI::App app{"Exact-arithmetic workbench for anticommutative antiassociative (Acaa) algebras", "acaa-cli"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--seed", g.seed, "Seed for every randomized input");
    app.add_option("--samples", g.samples, "Number of random samples");
    app.add_option("--jobs", g.jobs, "Worker threads for enumerate and rep-check")->check(CLI::Range(1u, 256u));
    app.add_option("--out", g.out, "Output file");
    app.add_flag("--timing", g.timing, "Include elapsed time (makes reports non-reproducible)");

    // check
    std::string chk_ref, chk_identity = "acaa", chk_coeffs;
    auto *check = app.add_subcommand("check", "Test an identity on every basis triple");
    check->add_option("algebra", chk_ref, "Algebra file or catalog name")->required();
    check->add_option("--identity", chk_identity)
        ->check(CLI::IsMember({"acaa", "anticommutative", "jacobi", "antiassociative", "cyclic", "custom",
                               "rho-associative", "acaa-admissible"}));
    check->add_option("--coeffs", chk_coeffs, "a1..a6,b1..b6 for --identity custom");

    // free
    std::size_t free_n = 0;
    std::string free_word;
    auto *freec = app.add_subcommand("free", "Free Acaa algebra on n generators");
    freec->add_option("--generators", free_n)->required()->check(CLI::Range(1ul, 12ul));
    freec->add_option("--word", free_word, "Bracket word to normalise, e.g. \"((X1 X2) X3)\"");

    std::string fp_ref;
    auto *fpc = app.add_subcommand("fingerprint", "Isomorphism invariants (dim, derived, annihilator, cube)");
    fpc->add_option("algebra", fp_ref)->required();

    std::string rec_ref;
    bool rec_scramble = false;
    auto *recc = app.add_subcommand("recognize", "Match against the classification catalog");
    recc->add_option("algebra", rec_ref)->required();
    recc->add_flag("--scramble", rec_scramble, "Apply a seeded random change of basis first");

    std::size_t en_dim = 3;
    std::uint64_t en_p = 3;
    auto *enc = app.add_subcommand("enumerate", "Exhaustive classification over F_p");
    enc->add_option("--dim", en_dim)->required();
    enc->add_option("--p", en_p)->required();

    std::string ad_ref, ad_element, ad_basis;
    bool ad_check = false;
    auto *adc = app.add_subcommand("ad", "Adjoint operators");
    adc->add_option("algebra", ad_ref)->required();
    adc->add_option("--element", ad_element, "Comma-separated coordinates");
    adc->add_option("--basis", ad_basis, "Basis label or 1-based index");
    adc->add_flag("--check", ad_check, "Verify the ad identities and the weight-2 anti-derivation property");

    std::string rep_file, rep_adjoint;
    bool rep_search = false;
    std::uint64_t rep_p = 3;
    std::size_t rep_dim = 3;
    auto *repc = app.add_subcommand("rep-check", "Validate a representation or search for faithful h3 ones");
    repc->add_option("file", rep_file, "Representation file");
    repc->add_option("--adjoint", rep_adjoint, "Check the adjoint representation of this algebra");
    repc->add_flag("--search-h3", rep_search);
    repc->add_option("--p", rep_p);
    repc->add_option("--dim", rep_dim);

    std::string co_check, co_ref;
    std::size_t co_gens = 0;
    auto *coc = app.add_subcommand("cohomology", "Sampled cochain-complex checks");
    coc->add_option("--check", co_check)->required()->check(CLI::IsMember({"d2d1", "cyclic", "d3d2", "gmap"}));
    coc->add_option("--algebra", co_ref);
    coc->add_option("--generators", co_gens, "Use free(n) with its grading (gmap)");

    auto *sec = app.add_subcommand("series", "Generating series");
    sec->require_subcommand(1);
    std::size_t inv_order = 6, kz_order = 6;
    std::string inv_conv = "direct";
    bool kz_swap = false;
    auto *inv = sec->add_subcommand("inverse", "Minimal-model series");
    inv->add_option("--order", inv_order)->check(CLI::Range(1ul, 200ul));
    inv->add_option("--convention", inv_conv)->check(CLI::IsMember({"direct", "opposite"}));
    auto *kz = sec->add_subcommand("koszul", "Koszul functional-equation residual");
    kz->add_option("--order", kz_order)->check(CLI::Range(1ul, 200ul));
    kz->add_flag("--swap-roles", kz_swap);

    auto *opc = app.add_subcommand("operad", "Operad dimensions and dual relations");
    opc->require_subcommand(1);
    std::size_t dims_order = 6;
    auto *odims = opc->add_subcommand("dims");
    odims->add_option("--order", dims_order)->check(CLI::Range(1ul, 200ul));
    auto *odual = opc->add_subcommand("dual-check");

    std::size_t cat_dim = 0;
    std::string cat_name;
    auto *catc = app.add_subcommand("catalog", "List catalog entries or export one");
    catc->add_option("--dim", cat_dim);
    catc->add_option("--name", cat_name);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (CLI::CallForHelp const &) {
        out << app.help();
        return 0;
    } catch (CLI::CallForAllHelp const &) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (CLI::ParseError const &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    CommandReport r;
    bool report_to_out = true; // --out holds the report unless the command writes an artifact
    auto t0 = std::chrono::steady_clock::now();
    try {
        if (*check) {
            r.command = "check";
            Algebra A = resolve_algebra(chk_ref);
            r.payload["algebra"] = A.name().empty() ? chk_ref : A.name();
            r.payload["identity"] = chk_identity;
            if (chk_identity != "custom" && !chk_coeffs.empty())
                throw ParseError("--coeffs: only valid with --identity custom");
            if (chk_identity == "acaa") {
                auto ac = check_anticommutative(A);
                apply_check(r, A, ac.holds() ? check_acaa(A) : ac);
            } else if (chk_identity == "anticommutative") {
                apply_check(r, A, check_anticommutative(A));
            } else if (chk_identity == "jacobi") {
                apply_check(r, A, check_jacobi(A));
            } else if (chk_identity == "antiassociative") {
                apply_check(r, A, check_antiassociative(A));
            } else if (chk_identity == "cyclic") {
                apply_check(r, A, check_cyclic_triple(A));
            } else if (chk_identity == "rho-associative") {
                apply_check(r, A, check_rho_associative(A));
            } else if (chk_identity == "acaa-admissible") {
                apply_check(r, A, check_acaa_admissible(A));
            } else {
                if (chk_coeffs.empty())
                    throw ParseError("--coeffs: required with --identity custom");
                auto parts = split_csv(chk_coeffs);
                if (parts.size() != 12)
                    throw ParseError("--coeffs: expected 12 values a1..a6,b1..b6, got " +
                                     std::to_string(parts.size()));
                QuadIdentityCoeffs c = QuadIdentityCoeffs::from_ints(A.field(), {});
                for (std::size_t i = 0; i < 12; ++i) {
                    Scalar s = Scalar::zero(A.field());
                    try {
                        s = Scalar::parse(A.field(), parts[i]);
                    } catch (Error const &e) {
                        throw ParseError("--coeffs[" + std::to_string(i) + "]: " + e.what());
                    }
                    (i < 6 ? c.a[i] : c.b[i - 6]) = s;
                }
                r.payload["coeffs"] = parts;
                apply_check(r, A, check_quadratic_identity(A, c));
            }
        } else if (*freec) {
            r.command = "free";
            FreeAcaaAlgebra F = free_acaa(free_n);
            r.payload["generators"] = free_n;
            r.payload["dim"] = F.algebra().dim();
            r.payload["graded_dims"] = graded_dims(free_n);
            if (!free_word.empty()) {
                BracketWord w = BracketWord::parse(free_word);
                auto nf = normal_form(F, w);
                r.payload["word"] = w.to_string();
                r.payload["normal_form"] = format_element(F.algebra(), to_vector(F, nf));
            }
            if (!g.out.empty()) {
                save_algebra(F.algebra(), g.out);
                r.payload["out"] = g.out;
                report_to_out = false;
            } else if (free_word.empty()) {
                r.payload["algebra"] = algebra_to_json(F.algebra());
            }
        } else if (*fpc) {
            r.command = "fingerprint";
            Algebra A = resolve_algebra(fp_ref);
            auto fp = fingerprint(A);
            r.payload = fingerprint_json(fp);
            r.payload["fingerprint"] = to_string(fp);
        } else if (*recc) {
            r.command = "recognize";
            Algebra A = resolve_algebra(rec_ref);
            if (rec_scramble) {
                Sampler s(g.seed);
                A = change_of_basis(A, s.invertible(A.field(), A.dim()));
            }
            r.payload["name"] = recognize(A);
            r.payload["fingerprint"] = to_string(fingerprint(A));
        } else if (*enc) {
            r.command = "enumerate";
            auto res = enumerate_finite(en_dim, en_p, g.jobs);
            r.payload["dim"] = res.dim;
            r.payload["p"] = res.p;
            r.payload["acaa_count"] = res.acaa_count;
            r.payload["iso_classes"] = res.iso_class_count;
        } else if (*adc) {
            r.command = "ad";
            Algebra A = resolve_algebra(ad_ref);
            if (!ad_element.empty() && !ad_basis.empty())
                throw ParseError("ad: give at most one of --element, --basis");
            if (ad_element.empty() && ad_basis.empty() && !ad_check)
                throw ParseError("ad: one of --element, --basis or --check is required");
            if (!ad_element.empty() || !ad_basis.empty()) {
                Vector x = !ad_element.empty() ? parse_element(A, ad_element)
                                               : unit_vector(A.field(), A.dim(), parse_basis(A, ad_basis));
                Matrix m = ad_matrix(A, x);
                r.payload["element"] = format_element(A, x);
                r.payload["matrix"] = matrix_to_json(m);
                r.payload["rank"] = rank(m);
                r.status = Status::Value;
            }
            if (ad_check) {
                auto c = check_ad_identities(A);
                if (!c.holds()) {
                    fail_with(r, A, *c.witness());
                } else {
                    r.status = Status::Holds;
                    Sampler s(g.seed);
                    for (std::size_t i = 0; i < g.samples && r.status == Status::Holds; ++i) {
                        Vector x = s.vector(A.field(), A.dim());
                        auto w = check_weighted_antiderivation(A, ad_matrix(A, x), 2);
                        if (!w.holds()) {
                            fail_with(r, A, *w.witness());
                            r.payload["sample_element"] = format_element(A, x);
                        }
                    }
                    r.payload["samples"] = g.samples;
                }
            }
        } else if (*repc) {
            r.command = "rep-check";
            int modes = !rep_file.empty() + !rep_adjoint.empty() + rep_search;
            if (modes != 1)
                throw ParseError("rep-check: give exactly one of <file>, --adjoint, --search-h3");
            if (rep_search) {
                auto res = h3_faithfulness_search(rep_p, rep_dim, g.jobs);
                r.payload["p"] = res.p;
                r.payload["dim"] = res.d;
                r.payload["square_zero"] = res.square_zero;
                r.payload["admissible_pairs"] = res.admissible_pairs;
                r.payload["exhausted"] = res.exhausted;
                if (res.exhausted) {
                    r.status = Status::Holds;
                } else {
                    r.status = Status::Fails;
                    r.witness = std::vector<std::string>{"X", "Y"};
                    r.payload["X"] = matrix_to_json(res.counterexample->first);
                    r.payload["Y"] = matrix_to_json(res.counterexample->second);
                }
            } else {
                std::string source;
                std::optional<Representation> rep;
                if (!rep_adjoint.empty()) {
                    source = rep_adjoint;
                    rep.emplace(adjoint_representation(resolve_algebra(rep_adjoint)));
                } else {
                    rep.emplace(load_representation(rep_file, source));
                }
                Algebra const &A = rep->source();
                r.payload["source"] = source;
                r.payload["target_dim"] = rep->target_dim();
                auto c = check_representation(*rep);
                if (c.holds()) {
                    r.status = Status::Holds;
                    r.payload["faithful"] = is_faithful(*rep);
                } else {
                    // the residual is a target_dim x target_dim matrix, row-major
                    auto const &w = *c.witness();
                    std::size_t n = rep->target_dim();
                    std::vector<Vector> rows;
                    for (std::size_t i = 0; i < n; ++i)
                        rows.emplace_back(w.residual.begin() + i * n, w.residual.begin() + (i + 1) * n);
                    r.status = Status::Fails;
                    r.witness = labels_of(A, w.indices);
                    r.payload["law"] = w.law;
                    r.payload["residual"] = matrix_to_json(Matrix(A.field(), rows));
                }
                if (!g.out.empty()) {
                    write_json_file(g.out, representation_json(source, *rep));
                    r.payload["out"] = g.out;
                    report_to_out = false;
                }
            }
        } else if (*coc) {
            r.command = "cohomology";
            r.payload["check"] = co_check;
            Sampler s(g.seed);
            if (co_check == "gmap") {
                std::optional<GradedAcaa> G;
                if (co_gens > 0) {
                    G.emplace(GradedAcaa::from_free(free_acaa(co_gens)));
                } else if (!co_ref.empty()) {
                    Algebra A = resolve_algebra(co_ref);
                    auto deg = degrees_from_labels(A);
                    if (!deg)
                        throw ParseError(co_ref + ": gmap needs --generators or free-style basis labels");
                    G.emplace(A, *deg);
                } else {
                    throw ParseError("cohomology: --algebra or --generators is required");
                }
                r.payload["algebra"] = G->algebra().name();
                apply_check(r, G->algebra(), check_gmap_degree_one(*G));
            } else {
                if (co_ref.empty())
                    throw ParseError("cohomology: --algebra is required");
                Algebra A = resolve_algebra(co_ref);
                r.payload["algebra"] = A.name().empty() ? co_ref : A.name();
                r.payload["samples"] = g.samples;
                json dumped = json::array();
                r.status = co_check == "d3d2" ? Status::Value : Status::Holds;
                std::size_t zero_composites = 0;
                for (std::size_t i = 0; i < g.samples; ++i) {
                    if (co_check == "d2d1") {
                        Matrix f = s.matrix(A.field(), A.dim(), A.dim());
                        Cochain3 psi = delta2(A, delta1(A, f));
                        if (!psi.map().is_zero()) {
                            auto at = first_nonzero_args(psi.map());
                            r.status = Status::Fails;
                            r.witness = labels_of(A, at);
                            r.payload["law"] = "delta2(delta1 f) = 0";
                            r.payload["residual"] = format_element(A, psi.map().at(at));
                            r.payload["failing_sample"] = i;
                            break;
                        }
                        continue;
                    }
                    Cochain2 phi = random_cochain2(s, A.field(), A.dim());
                    if (!g.out.empty())
                        dumped.push_back(cochain_json(phi.map()));
                    if (co_check == "cyclic") {
                        Cochain3 psi = delta2(A, phi); // validates membership in C^3
                        (void)psi;
                        auto c = check_cyclic_sum(A, phi);
                        if (!c.holds()) {
                            fail_with(r, A, *c.witness());
                            r.payload["failing_sample"] = i;
                            break;
                        }
                    } else {
                        if (delta3(A, delta2(A, phi)).is_zero())
                            ++zero_composites;
                    }
                }
                if (co_check == "d3d2")
                    r.payload["zero_composites"] = zero_composites;
                if (!g.out.empty() && co_check != "d2d1") {
                    write_json_file(g.out, dumped);
                    r.payload["out"] = g.out;
                    report_to_out = false;
                }
            }
        } else if (*sec) {
            r.command = "series";
            if (*inv) {
                auto conv = inv_conv == "direct" ? MinimalModelConvention::DirectInverse
                                                 : MinimalModelConvention::OppositeSign;
                auto m = minimal_model_series(inv_order, conv);
                r.payload["coeffs"] = m.coeff_strings();
                r.payload["series"] = m.to_string();
            } else {
                std::size_t n = kz_order + 1;
                auto acaa_dims_v = acaa_dims(n), dual_dims_v = dual_dims(n);
                auto gP = generating_series(acaa_dims_v, kz_order);
                auto gD = generating_series(dual_dims_v, kz_order);
                auto res = koszul_residual(gP, gD, kz_order, kz_swap);
                r.payload["coeffs"] = res.coeff_strings();
                r.payload["series"] = res.to_string();
                r.payload["residual_zero"] = res.is_zero();
            }
        } else if (*opc) {
            r.command = "operad";
            if (*odims) {
                auto a = acaa_dims(dims_order), d = dual_dims(dims_order);
                r.payload["acaa_dims"] = a;
                r.payload["dual_dims"] = d;
                r.payload["g_acaa"] = generating_series(a, dims_order).to_string();
                r.payload["g_dual"] = generating_series(d, dims_order).to_string();
            } else if (*odual) {
                auto dn = dual_relations_force_nilpotency();
                Matrix P = pairing_matrix();
                bool diag_ok = true;
                json diag = json::array();
                for (std::size_t i = 0; i < 12; ++i) {
                    long expect = (i < 6 ? 1 : -1) * signature(sigma3()[i % 6]);
                    diag.push_back(P.entries()[i * 12 + i].to_string());
                    for (std::size_t j = 0; j < 12; ++j) {
                        Scalar want(FieldSpec::rationals(), i == j ? expect : 0);
                        if (!(P.entries()[i * 12 + j] == want))
                            diag_ok = false;
                    }
                }
                Subspace R = sigma3_orbit_span(cyclic_relation_full12(-1));
                r.payload["rank_over_q"] = dn.rank_over_q;
                r.payload["rank_over_f2"] = dn.rank_over_f2;
                r.payload["forces_nilpotency"] = dn.forces_nilpotency;
                r.payload["pairing_diagonal"] = diag;
                r.payload["relation_span_dim"] = R.dim();
                r.payload["orthogonal_dim"] = orthogonal_complement(R).dim();
                r.payload["dual_dims"] = dn.dual_dims;
                r.status = (dn.forces_nilpotency && dn.rank_over_q == 3 && diag_ok) ? Status::Holds : Status::Fails;
                if (r.status == Status::Fails)
                    r.witness = std::vector<std::string>{"cyclic-relation-matrix"};
            }
        } else if (*catc) {
            r.command = "catalog";
            if (!cat_name.empty()) {
                auto e = catalog_lookup(cat_name);
                if (!e)
                    throw ParseError("--name: no catalog entry '" + cat_name + "'");
                r.payload["name"] = e->name;
                r.payload["fingerprint"] = to_string(e->expected);
                r.payload["source"] = e->source;
                if (!g.out.empty()) {
                    save_algebra(e->algebra, g.out);
                    r.payload["out"] = g.out;
                    report_to_out = false;
                } else {
                    r.payload["algebra"] = algebra_to_json(e->algebra);
                }
            } else {
                auto entries = cat_dim ? catalog(cat_dim) : catalog_all();
                json list = json::array();
                for (auto const &e : entries)
                    list.push_back(e.name + " " + to_string(e.expected));
                r.payload["entries"] = list;
            }
        }
    } catch (Error const &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (std::exception const &e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
    if (g.timing)
        r.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    if (!g.out.empty() && report_to_out) {
        std::ofstream o(g.out);
        if (!o) {
            err << "error: " << g.out << ": cannot write\n";
            return 2;
        }
        render(r, g.format, o);
    } else {
        render(r, g.format, out);
    }
    return r.status == Status::Fails ? 1 : 0;
}

} // namespace acaa::cli
