#include "toricwhb/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "toricwhb/errors.hpp"

namespace toricwhb::io {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& source, const std::string& where, const std::string& what) {
    throw InputError(source + ": " + (where.empty() ? "" : where + ": ") + what);
}

Json parse_json(const std::string& text, const std::string& source) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::string msg = e.what();
        if (auto pos = msg.find("syntax error"); pos != std::string::npos) msg = msg.substr(pos);
        throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
    }
}

const Json& field(const Json& obj, const char* key, const std::string& source, const std::string& where) {
    if (!obj.is_object()) fail(source, where, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(source, where, std::string("missing key \"") + key + "\"");
    return *it;
}

long as_long(const Json& v, const std::string& source, const std::string& where) {
    if (!v.is_number_integer()) fail(source, where, "expected an integer");
    if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(LONG_MAX))
        fail(source, where, "integer out of range");
    return v.get<long>();
}

std::size_t as_index(const Json& v, const std::string& source, const std::string& where) {
    const long x = as_long(v, source, where);
    if (x < 0) fail(source, where, "expected a nonnegative index");
    return static_cast<std::size_t>(x);
}

IntVector as_int_vector(const Json& v, const std::string& source, const std::string& where) {
    if (!v.is_array()) fail(source, where, "expected an array of integers");
    IntVector out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out.emplace_back(as_long(v[i], source, where + "[" + std::to_string(i) + "]"));
    return out;
}

Json to_json(const Integer& x) {
    if (!x.fits_slong_p()) throw InputError("integer " + x.get_str() + " does not fit the file format");
    return x.get_si();
}

Json to_json(const IntVector& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
}

Json to_json(const fan::RaySet& s) {
    Json out = Json::array();
    for (auto i : s) out.push_back(i);
    return out;
}

bool is_flat(const Json& j) {
    if (j.is_primitive()) return true;
    if (!j.is_array()) return false;
    for (const auto& e : j)
        if (!e.is_primitive()) return false;
    return true;
}

// Pretty printer that keeps short arrays (of scalars, or of scalar arrays
// inside a larger structure) on one line.
void emit(std::ostringstream& os, const Json& j, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
    if (is_flat(j)) {
        os << j.dump(-1, ' ', false, Json::error_handler_t::strict);
        return;
    }
    if (j.is_array()) {
        if (j.empty()) {
            os << "[]";
            return;
        }
        os << "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            os << inner;
            emit(os, j[i], indent + 1);
            os << (i + 1 < j.size() ? ",\n" : "\n");
        }
        os << pad << ']';
        return;
    }
    if (j.empty()) {
        os << "{}";
        return;
    }
    os << "{\n";
    std::size_t k = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++k) {
        os << inner << Json(it.key()).dump() << ": ";
        emit(os, it.value(), indent + 1);
        os << (k + 1 < j.size() ? ",\n" : "\n");
    }
    os << pad << '}';
}

std::string render(const Json& j) {
    std::ostringstream os;
    emit(os, j, 0);
    os << '\n';
    return os.str();
}

fan::Fan fan_from_json(const Json& j, const std::string& source, const std::string& where) {
    const auto dim = as_index(field(j, "dim", source, where), source, where + ".dim");
    const Json& rays_json = field(j, "rays", source, where);
    if (!rays_json.is_array()) fail(source, where + ".rays", "expected an array");
    std::vector<IntVector> rays;
    for (std::size_t i = 0; i < rays_json.size(); ++i)
        rays.push_back(as_int_vector(rays_json[i], source, where + ".rays[" + std::to_string(i) + "]"));
    const Json& cones_json = field(j, "max_cones", source, where);
    if (!cones_json.is_array()) fail(source, where + ".max_cones", "expected an array");
    std::vector<fan::RaySet> cones;
    for (std::size_t i = 0; i < cones_json.size(); ++i) {
        const std::string at = where + ".max_cones[" + std::to_string(i) + "]";
        if (!cones_json[i].is_array()) fail(source, at, "expected an array of indices");
        fan::RaySet c;
        for (std::size_t k = 0; k < cones_json[i].size(); ++k) {
            const auto idx = as_index(cones_json[i][k], source, at + "[" + std::to_string(k) + "]");
            if (idx >= rays.size())
                fail(source, at + "[" + std::to_string(k) + "]",
                     "ray index " + std::to_string(idx) + " out of range (" + std::to_string(rays.size()) + " rays)");
            c.push_back(idx);
        }
        cones.push_back(std::move(c));
    }
    try {
        return fan::Fan(dim, std::move(rays), std::move(cones));
    } catch (const InputError& e) {
        fail(source, where, e.what());
    }
}

Json fan_to_json(const fan::Fan& f) {
    Json j;
    j["dim"] = f.dim();
    Json rays = Json::array();
    for (const auto& r : f.rays()) rays.push_back(to_json(r));
    j["rays"] = rays;
    Json cones = Json::array();
    for (const auto& c : f.max_cones()) cones.push_back(to_json(c));
    j["max_cones"] = cones;
    return j;
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write " + path.string());
    out << text;
    if (!out) throw InputError("write failed for " + path.string());
}

fan::Fan parse_fan(const std::string& text, const std::string& source) {
    return fan_from_json(parse_json(text, source), source, "");
}

fan::Fan read_fan(const std::filesystem::path& path) { return parse_fan(read_text_file(path), path.string()); }

std::string format_fan(const fan::Fan& fan) { return render(fan_to_json(fan)); }

divisor::TorusDivisor parse_divisor(const std::string& text, const std::string& source) {
    return as_int_vector(parse_json(text, source), source, "divisor");
}

std::string format_divisor(const divisor::TorusDivisor& d) { return render(to_json(d)); }

bundle::BundleSpec parse_bundle_spec(const std::string& text, const std::filesystem::path& base_dir,
                                     const std::string& source) {
    const Json j = parse_json(text, source);
    const Json& base_json = field(j, "base", source, "");
    std::optional<fan::Fan> base;
    if (base_json.is_string()) {
        std::filesystem::path p = base_json.get<std::string>();
        if (p.is_relative()) p = base_dir / p;
        base = read_fan(p);
    } else {
        base = fan_from_json(base_json, source, "base");
    }
    const Json& summands = field(j, "summands", source, "");
    if (!summands.is_array()) fail(source, "summands", "expected an array of divisors");
    bundle::BundleSpec spec{*base, {}};
    for (std::size_t i = 0; i < summands.size(); ++i) {
        const std::string at = "summands[" + std::to_string(i) + "]";
        auto d = as_int_vector(summands[i], source, at);
        if (d.size() != base->num_rays())
            fail(
                source, at,
                "has " + std::to_string(d.size()) + " entries, base has " + std::to_string(base->num_rays()) + " rays");
        spec.summands.push_back(std::move(d));
    }
    return spec;
}

bundle::BundleSpec read_bundle_spec(const std::filesystem::path& path) {
    return parse_bundle_spec(read_text_file(path), path.parent_path(), path.string());
}

std::string format_bundle_spec(const bundle::BundleSpec& spec) {
    Json j;
    j["base"] = fan_to_json(spec.base);
    Json s = Json::array();
    for (const auto& d : spec.summands) s.push_back(to_json(d));
    j["summands"] = s;
    return render(j);
}

cox::CoxForm parse_equation(const std::string& text, const std::string& source) {
    const Json j = parse_json(text, source);
    const long p = as_long(field(j, "char", source, ""), source, "char");
    if (p < 2) fail(source, "char", "characteristic must be a prime");
    const Json& terms = field(j, "terms", source, "");
    if (!terms.is_array() || terms.empty()) fail(source, "terms", "expected a nonempty array");
    std::vector<cox::Term> out;
    std::size_t nvars = 0;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const std::string at = "terms[" + std::to_string(i) + "]";
        const Json& e = field(terms[i], "exponents", source, at);
        if (!e.is_array()) fail(source, at + ".exponents", "expected an array");
        cox::Term t;
        for (std::size_t k = 0; k < e.size(); ++k) {
            const long x = as_long(e[k], source, at + ".exponents[" + std::to_string(k) + "]");
            if (x < 0) fail(source, at + ".exponents[" + std::to_string(k) + "]", "negative exponent");
            t.exponents.push_back(static_cast<unsigned>(x));
        }
        if (i == 0) nvars = t.exponents.size();
        if (t.exponents.size() != nvars) fail(source, at + ".exponents", "length differs from the first term");
        t.coeff = terms[i].contains("coeff") ? as_long(terms[i]["coeff"], source, at + ".coeff") : 1;
        out.push_back(std::move(t));
    }
    return cox::CoxForm(nvars, p, std::move(out));
}

std::string format_equation(const cox::CoxForm& form) {
    Json j;
    j["char"] = form.characteristic();
    Json terms = Json::array();
    for (const auto& t : form.terms()) {
        Json tj;
        tj["exponents"] = t.exponents;
        tj["coeff"] = t.coeff;
        terms.push_back(tj);
    }
    j["terms"] = terms;
    return render(j);
}

std::string format_relations(const std::vector<primitive::PrimitiveRelation>& rels) {
    Json out = Json::array();
    for (const auto& r : rels) {
        Json j;
        j["collection"] = to_json(r.collection);
        j["target"] = to_json(r.target);
        j["coeffs"] = to_json(IntVector(r.coeffs.begin(), r.coeffs.end()));
        j["degree"] = to_json(r.degree);
        j["extremal"] = r.extremal;
        out.push_back(j);
    }
    return render(out);
}

std::string format_verdicts(const std::vector<whb::PrimeVerdict>& verdicts) {
    Json out = Json::array();
    for (const auto& v : verdicts) {
        Json j;
        j["prime"] = v.prime;
        j["admissible"] = v.admissible;
        Json rels = Json::array();
        for (const auto& r : v.relations) {
            Json rj;
            rj["relation"] = r.relation_id;
            rj["extremal"] = r.extremal;
            rj["case_i"] = r.case_i;
            rj["case_ii"] = r.case_ii;
            rj["passes"] = r.passes();
            rels.push_back(rj);
        }
        j["relations"] = rels;
        out.push_back(j);
    }
    return render(out);
}

}  // namespace toricwhb::io
