#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "toricwhb/catalog.hpp"
#include "toricwhb/cox.hpp"
#include "toricwhb/errors.hpp"
#include "toricwhb/io.hpp"
#include "toricwhb/primitive.hpp"
#include "toricwhb/reproduce.hpp"
#include "toricwhb/whb.hpp"

using namespace toricwhb;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;

std::string relation_text(const primitive::PrimitiveRelation& r, const std::vector<std::string>& names) {
    std::ostringstream os;
    for (std::size_t i = 0; i < r.collection.size(); ++i) os << (i ? " + " : "") << names[r.collection[i]];
    os << " = ";
    if (r.target.empty()) os << '0';
    for (std::size_t i = 0; i < r.target.size(); ++i) {
        os << (i ? " + " : "");
        if (r.coeffs[i] != 1) os << r.coeffs[i].get_str() << '*';
        os << names[r.target[i]];
    }
    return os.str();
}

std::vector<std::string> default_names(const fan::Fan& f) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < f.num_rays(); ++i) names.push_back("x" + std::to_string(i + 1));
    return names;
}

std::vector<std::string> bundle_names(const bundle::TotalSpaceFan& t) {
    std::vector<std::string> names(t.fan.num_rays());
    for (std::size_t i = 0; i < t.base_ray_map.size(); ++i) names[t.base_ray_map[i]] = "x~" + std::to_string(i + 1);
    for (std::size_t j = 0; j < t.fiber_rays.size(); ++j) names[t.fiber_rays[j]] = "y" + std::to_string(j + 1);
    return names;
}

std::string join(const std::vector<long>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s + "}";
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        io::write_text_file(out_path, text);
}

int cmd_catalog_list() {
    for (const auto& e : catalog::list()) {
        std::cout << e.name;
        if (!e.parameters.empty()) std::cout << " [" << e.parameters << "]";
        std::cout << "  " << e.description << '\n';
    }
    std::cout << "bundles: caseI [--d --a], caseII [--d --a --b], S7, S6, M1, pseudoV4, V4\n";
    return kOk;
}

int cmd_catalog_get(const std::string& name, std::size_t d, long a, long b, const std::string& what,
                    const std::string& out) {
    if (what == "fan") {
        const bool bundle_id = name == "caseI" || name == "caseII";
        emit(io::format_fan(bundle_id ? catalog::named_bundle(name, d, a, b).spec.base : catalog::get(name, d, a, b)),
             out);
        return kOk;
    }
    const auto pb = catalog::named_bundle(name, d, a, b);
    if (what == "bundle")
        emit(io::format_bundle_spec(pb.spec), out);
    else if (what == "total")
        emit(io::format_fan(pb.total.fan), out);
    else if (what == "equation")
        emit(io::format_equation(pb.equation), out);
    else if (what == "line-bundle")
        emit(io::format_divisor(pb.line_bundle), out);
    else
        throw InputError("unknown export kind '" + what + "'");
    return kOk;
}

int cmd_fan_info(const std::string& path) {
    const auto f = io::read_fan(path);
    const auto report = fan::validate(f);
    std::cout << "file: " << path << '\n';
    if (report.ok()) {
        std::cout << "smooth complete, d=" << f.dim() << ", rho=" << fan::picard_number(f) << '\n';
    } else {
        std::cout << "invalid fan, d=" << f.dim() << '\n';
        for (const auto& p : report.problems) std::cout << "  problem: " << p << '\n';
    }
    std::cout << "rays: " << f.num_rays() << "\nmaximal cones: " << f.max_cones().size() << '\n';
    std::cout << "primitive: " << (report.primitive ? "yes" : "no")
              << ", unimodular: " << (report.smooth ? "yes" : "no")
              << ", cones meet in faces: " << (report.intersections ? "yes" : "no")
              << ", complete: " << (report.complete ? "yes" : "no") << '\n';
    return report.ok() ? kOk : kCheckFailed;
}

int cmd_relations(const std::string& path, bool json) {
    const auto f = io::read_fan(path);
    fan::require_valid(f);
    const auto rels = primitive::primitive_relations(f);
    if (json) {
        std::cout << io::format_relations(rels);
        return kOk;
    }
    const auto names = default_names(f);
    std::cout << rels.size() << " primitive relations\n";
    for (const auto& r : rels)
        std::cout << "  " << relation_text(r, names) << "    degree " << r.degree.get_str()
                  << (r.extremal ? "  extremal" : "") << '\n';
    const bool fano = primitive::is_fano(rels);
    std::cout << "Fano: " << (fano ? "yes" : "no") << '\n';
    for (const auto& r : rels)
        if (r.degree <= 0) std::cout << "  nonpositive degree: " << relation_text(r, names) << '\n';
    return kOk;
}

int cmd_whb_check(const std::string& path, long p, long pmax, bool json) {
    const auto f = io::read_fan(path);
    fan::require_valid(f);
    const auto rels = primitive::primitive_relations(f);
    auto verdicts = whb::admissible_primes(rels, f.dim(), p > 0 ? p : pmax);
    if (p > 0) {
        std::erase_if(verdicts, [&](const whb::PrimeVerdict& v) { return v.prime != p; });
        if (verdicts.empty()) throw InputError(std::to_string(p) + " is not a prime");
    }
    const auto admissible = whb::admissible_set(verdicts);
    if (json) {
        std::cout << io::format_verdicts(verdicts);
    } else {
        const auto names = default_names(f);
        for (const auto& v : verdicts) {
            std::cout << "p=" << v.prime << ": " << (v.admissible ? "admissible" : "excluded") << '\n';
            for (const auto& r : v.relations) {
                if (!r.extremal) continue;
                std::cout << "  " << relation_text(rels[r.relation_id], names) << "  case(i) "
                          << (r.case_i ? "yes" : "no") << ", case(ii) " << (r.case_ii ? "yes" : "no") << '\n';
            }
        }
        std::cout << "admissible primes: " << join(admissible) << '\n';
    }
    return admissible.empty() ? kCheckFailed : kOk;
}

int cmd_bundle_build(const std::string& base_path, const std::vector<std::string>& summand_paths,
                     const std::string& spec_path, const std::string& out) {
    bundle::BundleSpec spec = [&] {
        if (!spec_path.empty()) {
            if (!base_path.empty() || !summand_paths.empty())
                throw InputError("give either --spec or a base fan with summands, not both");
            return io::read_bundle_spec(spec_path);
        }
        if (base_path.empty()) throw InputError("missing base fan (or --spec)");
        bundle::BundleSpec s{io::read_fan(base_path), {}};
        for (const auto& p : summand_paths) s.summands.push_back(io::parse_divisor(io::read_text_file(p), p));
        return s;
    }();
    const auto t = bundle::projectivize(spec);
    const auto report = fan::validate(t.fan);
    if (!report.ok()) throw InternalError("projectivized fan does not validate: " + report.problems.front());
    emit(io::format_fan(t.fan), out);
    std::ostream& log = out.empty() ? std::cerr : std::cout;
    log << "total space: d=" << t.fan.dim() << ", rays=" << t.fan.num_rays() << ", rho=" << fan::picard_number(t.fan)
        << '\n';
    const auto names = bundle_names(t);
    for (std::size_t i = 0; i < names.size(); ++i) log << "  ray " << i << ": " << names[i] << '\n';
    return kOk;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

int cmd_smooth_check(const std::string& space_path, const std::string& eq_path, long p_text, long q,
                     std::uint64_t budget, unsigned threads) {
    const std::string space_text = io::read_text_file(space_path);
    std::optional<bundle::TotalSpaceFan> total;
    std::optional<fan::Fan> plain;
    if (space_text.find("\"summands\"") != std::string::npos)
        total = bundle::projectivize(
            io::parse_bundle_spec(space_text, std::filesystem::path(space_path).parent_path(), space_path));
    else
        plain = io::parse_fan(space_text, space_path);
    const fan::Fan& f = total ? total->fan : *plain;
    fan::require_valid(f);

    const std::string eq_text = trim(io::read_text_file(eq_path));
    const cox::CoxForm form = !eq_text.empty() && eq_text.front() == '{' ? io::parse_equation(eq_text, eq_path)
                              : total ? cox::parse_bundle_form(*total, eq_text, p_text)
                                      : cox::parse_fan_form(f, eq_text, p_text);
    if (form.num_vars() != f.num_rays())
        throw InputError("equation has " + std::to_string(form.num_vars()) + " variables, fan has " +
                         std::to_string(f.num_rays()) + " rays");
    const long p = form.characteristic();
    if (total) std::cout << "equation: " << cox::format_bundle_form(*total, form) << '\n';

    bool ok = true;
    const auto cls = form.is_zero() ? std::nullopt : cox::is_homogeneous(f, form);
    if (!cls) {
        std::cout << "homogeneous: no\n";
        return kCheckFailed;
    }
    std::cout << "homogeneous: yes, class " << divisor::to_string(*cls) << '\n';

    if (total) {
        try {
            const bool wild = cox::is_wild_fiberwise(*total, form, p);
            std::cout << "fiberwise wild: " << (wild ? "yes" : "no") << '\n';
            ok = ok && wild;
        } catch (const InputError& e) {
            std::cout << "fiberwise wild: undecided (" << e.what() << ")\n";
            ok = false;
        }
    } else {
        std::cout << "fiberwise wild: n/a (not a bundle)\n";
    }

    auto verdict =
        total ? cox::decide_smooth_monomial_partials(*total, form) : cox::decide_smooth_monomial_partials(f, form);
    const long field = q > 0 ? q : p;
    std::optional<cox::SingularWitness> witness;
    if (verdict.outcome != cox::Outcome::smooth) {
        try {
            witness = cox::singular_point_search(f, form, field, budget, threads);
        } catch (const ResourceError& e) {
            std::cout << "finite-field search skipped: " << e.what() << '\n';
        }
        if (verdict.outcome == cox::Outcome::undecided && witness) {
            verdict.outcome = cox::Outcome::singular;
            verdict.method = cox::Method::finite_field_search;
        }
    }
    std::cout << "smoothness: " << cox::to_string(verdict.outcome) << " (" << cox::to_string(verdict.method) << ")\n";
    if (!verdict.reason.empty()) std::cout << "  " << verdict.reason << '\n';
    if (verdict.vanishing_set)
        std::cout << "  vanishing coordinates: " << fan::to_string(*verdict.vanishing_set) << '\n';
    if (witness) {
        std::cout << "  witness over F_" << witness->q << " in chart " << witness->chart << ": (";
        for (std::size_t i = 0; i < witness->point.size(); ++i) std::cout << (i ? ", " : "") << witness->point[i];
        std::cout << ")\n";
    }
    ok = ok && verdict.outcome == cox::Outcome::smooth;
    return ok ? kOk : kCheckFailed;
}

int cmd_reproduce(const std::string& section) {
    std::vector<reproduce::Check> all;
    for (const auto& s : reproduce::sections()) {
        if (!section.empty() && s != section) continue;
        auto part = reproduce::run_section(s);
        all.insert(all.end(), part.begin(), part.end());
    }
    if (all.empty()) reproduce::run_section(section);  // reports the unknown section
    std::cout << reproduce::format_table(all);
    for (const auto& c : all)
        if (!c.passed) return kCheckFailed;
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Toric primitive relations, projective bundles and wild hypersurface bundle checks"};
    app.require_subcommand(1);
    int status = kOk;

    auto* cat = app.add_subcommand("catalog", "Named fans and bundle constructions");
    cat->require_subcommand(1);
    cat->add_subcommand("list", "List catalog entries")->callback([&] { status = cmd_catalog_list(); });
    auto* get = cat->add_subcommand("get", "Export a catalog entry as JSON");
    std::string name, what = "fan", out;
    std::size_t d = 0;
    long a = 0, b = 0;
    get->add_option("name", name, "Entry name")->required();
    get->add_option("--d", d, "Dimension");
    get->add_option("--a", a, "First parameter (twist for kleinschmidt)");
    get->add_option("--b", b, "Second parameter");
    get->add_option("--export", what, "fan | bundle | total | equation | line-bundle")
        ->check(CLI::IsMember({"fan", "bundle", "total", "equation", "line-bundle"}));
    get->add_option("-o,--output", out, "Output file (default stdout)");
    get->callback([&] { status = cmd_catalog_get(name, d, a, b, what, out); });

    std::string path;
    auto* info = app.add_subcommand("fan-info", "Validate a fan file and print its invariants");
    info->add_option("fan", path, "Fan JSON file")->required();
    info->callback([&] { status = cmd_fan_info(path); });

    bool json = false;
    auto* rel = app.add_subcommand("relations", "Primitive relations, degrees, extremality and Fano test");
    rel->add_option("fan", path, "Fan JSON file")->required();
    rel->add_flag("--json", json, "JSON relation report");
    rel->callback([&] { status = cmd_relations(path, json); });

    long p = 0, pmax = 13;
    auto* wc = app.add_subcommand("whb-check", "Per-prime admissibility for a wild hypersurface bundle");
    wc->add_option("fan", path, "Fan JSON file")->required();
    wc->add_option("--p", p, "Check a single prime");
    wc->add_option("--pmax", pmax, "Largest prime to check")->check(CLI::PositiveNumber);
    wc->add_flag("--json", json, "JSON verdict report");
    wc->callback([&] { status = cmd_whb_check(path, p, pmax, json); });

    std::vector<std::string> summands;
    std::string spec_path;
    auto* bb = app.add_subcommand("bundle-build", "Fan of the projectivized split bundle");
    bb->add_option("base", path, "Base fan JSON file");
    bb->add_option("summands", summands, "Divisor JSON files, one per summand");
    bb->add_option("--spec", spec_path, "Bundle spec JSON file");
    bb->add_option("-o,--output", out, "Output fan file (default stdout)");
    bb->callback([&] { status = cmd_bundle_build(path, summands, spec_path, out); });

    std::string eq_path;
    long q = 0, p_text = 2;
    std::uint64_t budget = std::uint64_t{1} << 20;
    unsigned threads = 1;
    auto* sc = app.add_subcommand("smooth-check", "Homogeneity, wildness and smoothness of an equation");
    sc->add_option("space", path, "Fan JSON file or bundle spec JSON file")->required();
    sc->add_option("equation", eq_path, "Equation JSON file or text file (X_i, Y_j syntax)")->required();
    sc->add_option("--p", p_text, "Characteristic for text equations");
    sc->add_option("--q", q, "Field size for the finite-field search (default: the characteristic)");
    sc->add_option("--q-budget", budget, "Largest number of points searched per chart");
    sc->add_option("--threads", threads, "Worker threads for the search")->check(CLI::PositiveNumber);
    sc->callback([&] { status = cmd_smooth_check(path, eq_path, p_text, q, budget, threads); });

    std::string section;
    auto* rp = app.add_subcommand("reproduce", "Run the catalog regression checks");
    rp->add_option("--section", section, "4I, 4II or 5 (default: all)")->check(CLI::IsMember({"4I", "4II", "5"}));
    rp->callback([&] { status = cmd_reproduce(section); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return status;
}
