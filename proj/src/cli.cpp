#include "monring/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "monring/ideal_io.hpp"
#include "monring/oracle.hpp"
#include "monring/poincare.hpp"

namespace monring::cli {

namespace {

using nlohmann::json;

struct Options {
    std::string input = "-";
    std::string field = "rational";
    int trunc_z = 8;
    int trunc_deg = 8;
    std::string path = "formula";
    bool as_json = false;
    int cap = kDefaultGeneratorCap;
};

FieldSpec parse_field(const std::string& s) {
    if (s == "rational") return FieldSpec::rationals();
    if (s.rfind("gf:", 0) == 0) {
        unsigned long p = 0;
        std::string num = s.substr(3);
        try {
            std::size_t used = 0;
            p = std::stoul(num, &used);
            if (used != num.size()) throw std::invalid_argument(num);
        } catch (const std::exception&) {
            throw Error(ErrorKind::ParseError, "bad field '" + s + "'");
        }
        return FieldSpec::gf(p);
    }
    throw Error(ErrorKind::ParseError,
                "field must be 'rational' or 'gf:<p>', got '" + s + "'");
}

DenominatorPath parse_path(const std::string& s) {
    if (s == "formula") return DenominatorPath::Formula;
    if (s == "intervals") return DenominatorPath::Intervals;
    if (s == "deviations") return DenominatorPath::Deviations;
    throw Error(ErrorKind::ParseError,
                "path must be formula|intervals|deviations, got '" + s + "'");
}

IdealFile load_ideal(const std::string& input) {
    if (input == "-") return parse_ideal_file(std::cin);
    std::ifstream in(input);
    if (!in)
        throw Error(ErrorKind::ParseError, "cannot open '" + input + "'");
    return parse_ideal_file(in);
}

json coeff_to_json(const mpz_class& c) {
    if (c.fits_slong_p()) return json(c.get_si());
    return json(c.get_str());
}

json poly_to_json(const MultiPoly& p) {
    json terms = json::array();
    for (const auto& [key, coeff] : p.terms())
        terms.push_back({{"alpha", key.alpha}, {"z", key.z}, {"coeff", coeff_to_json(coeff)}});
    return json{{"terms", terms}};
}

std::vector<int> mask_members(Mask s) {
    std::vector<int> out;
    for (Mask c = s; c; c &= c - 1) out.push_back(lowest_bit(c));
    return out;
}

std::vector<std::string> polarized_names(const std::vector<std::string>& source_names,
                                         const PolarizationResult& pol) {
    std::vector<std::string> names;
    for (auto [i, j] : pol.target_vars)
        names.push_back(source_names[static_cast<std::size_t>(i)] + "_" +
                        std::to_string(j));
    return names;
}

int cmd_denominator(const Options& opt, std::ostream& out) {
    IdealFile file = load_ideal(opt.input);
    GeneratorSet m = file.generators(opt.cap);
    MultiPoly b = denominator(m, parse_field(opt.field), parse_path(opt.path));
    if (opt.as_json)
        out << poly_to_json(b).dump() << "\n";
    else
        out << b.to_string(file.var_names) << "\n";
    return 0;
}

int cmd_series(const Options& opt, std::ostream& out) {
    IdealFile file = load_ideal(opt.input);
    GeneratorSet m = file.generators(opt.cap);
    TruncatedSeries s =
        poincare_series(m, parse_field(opt.field), opt.trunc_z, opt.trunc_deg);
    if (opt.as_json) {
        json j = poly_to_json(s.poly());
        j["trunc_z"] = s.z_bound();
        j["trunc_deg"] = s.alpha_bound();
        out << j.dump() << "\n";
    } else {
        out << s.poly().to_string(file.var_names) << "\n";
    }
    return 0;
}

int cmd_betti(const Options& opt, std::ostream& out) {
    IdealFile file = load_ideal(opt.input);
    GeneratorSet m = file.generators(opt.cap);
    MultiPoly betti = betti_numerator(m, parse_field(opt.field));
    if (opt.as_json)
        out << poly_to_json(betti).dump() << "\n";
    else
        out << betti.to_string(file.var_names) << "\n";
    return 0;
}

int cmd_golod(const Options& opt, std::ostream& out) {
    IdealFile file = load_ideal(opt.input);
    GeneratorSet m = file.generators(opt.cap);
    FieldSpec field = parse_field(opt.field);
    std::optional<Monomial> failing;
    bool by_definition = is_golod(m, field);
    bool by_criterion = golod_via_criterion(m, field, &failing);
    MONRING_ASSERT(by_definition == by_criterion, "Golod routes disagree");
    if (opt.as_json) {
        json j{{"golod", by_definition}};
        if (failing) j["failing_restriction"] = render_monomial(*failing, file.var_names);
        out << j.dump() << "\n";
    } else {
        out << (by_definition ? "true" : "false") << "\n";
        if (failing)
            out << "not pre-Golod: M_{" << render_monomial(*failing, file.var_names)
                << "}\n";
    }
    return 0;
}

int cmd_deviations(const Options& opt, std::ostream& out) {
    IdealFile file = load_ideal(opt.input);
    GeneratorSet m = file.generators(opt.cap);
    DeviationTable table = squarefree_deviations(m, parse_field(opt.field));
    if (opt.as_json) {
        json eps = json::array();
        for (const auto& [key, value] : table.eps)
            eps.push_back({{"i", key.first},
                           {"alpha", render_monomial(key.second, file.var_names)},
                           {"value", value}});
        json p = json::array();
        for (const auto& [alpha, gf] : table.p)
            p.push_back({{"alpha", render_monomial(alpha, file.var_names)},
                         {"p", gf.to_string()}});
        out << json{{"eps", eps}, {"p", p}}.dump() << "\n";
    } else {
        for (const auto& [key, value] : table.eps)
            out << "eps[" << key.first << ", "
                << render_monomial(key.second, file.var_names) << "] = " << value
                << "\n";
        for (const auto& [alpha, gf] : table.p)
            out << "p[" << render_monomial(alpha, file.var_names)
                << "] = " << gf.to_string() << "\n";
    }
    return 0;
}

int cmd_saturated(const Options& opt, std::ostream& out) {
    IdealFile file = load_ideal(opt.input);
    GeneratorSet m = file.generators(opt.cap);
    json members = json::array();
    for (Mask s : enumerate_saturated(m).members)
        members.push_back({{"mask", s},
                           {"members", mask_members(s)},
                           {"m", render_monomial(m.lcm_of(s), file.var_names)},
                           {"c", m.component_count(s)}});
    out << members.dump() << "\n";
    return 0;
}

int cmd_complexes(const Options& opt, std::ostream& out) {
    IdealFile file = load_ideal(opt.input);
    GeneratorSet m = file.generators(opt.cap);
    json list = json::array();
    for (Mask s : enumerate_saturated(m).members) {
        std::vector<int> vertices = mask_members(s);
        SimplicialComplex complex = lcm_complex_componentwise(s, m);
        json faces = json::array();
        for (FaceMask f : complex.faces()) {
            json face = json::array();
            for (int v = 0; v < complex.vertex_count(); ++v)
                if (f & (FaceMask(1) << v))
                    face.push_back(vertices[static_cast<std::size_t>(v)]);
            faces.push_back(face);
        }
        list.push_back({{"mask", s},
                        {"m", render_monomial(m.lcm_of(s), file.var_names)},
                        {"faces", faces}});
    }
    out << list.dump() << "\n";
    return 0;
}

int cmd_polarize(const Options& opt, std::ostream& out) {
    IdealFile file = load_ideal(opt.input);
    GeneratorSet m = file.generators(opt.cap);
    PolarizationResult pol = polarize(m);
    std::vector<std::string> names = polarized_names(file.var_names, pol);
    if (opt.as_json) {
        json gens = json::array();
        for (int i = 0; i < m.size(); ++i)
            gens.push_back({{"source", render_monomial(m.gen(i), file.var_names)},
                            {"target", render_monomial(pol.target.gen(i), names)}});
        json lattice = json::array();
        for (const auto& [from, to] : pol.lattice_map)
            lattice.push_back({{"from", render_monomial(from, names)},
                               {"to", render_monomial(to, file.var_names)}});
        out << json{{"vars", names}, {"generators", gens}, {"lattice_map", lattice}}.dump()
            << "\n";
    } else {
        out << "vars:";
        for (const std::string& n : names) out << " " << n;
        out << "\n";
        for (int i = 0; i < m.size(); ++i)
            out << render_monomial(m.gen(i), file.var_names) << " -> "
                << render_monomial(pol.target.gen(i), names) << "\n";
    }
    return 0;
}

int cmd_verify(const Options& opt, std::ostream& out) {
    IdealFile file = load_ideal(opt.input);
    GeneratorSet m = file.generators(opt.cap);
    FieldSpec field = parse_field(opt.field);
    IdentityReport report =
        verify_main_identity(m, field, opt.trunc_z, opt.trunc_deg);
    if (opt.as_json) {
        json j{{"ok", report.ok},
               {"field", field.name()},
               {"trunc_z", opt.trunc_z},
               {"trunc_deg", opt.trunc_deg}};
        json disc = json::array();
        for (const auto& d : report.discrepancies)
            disc.push_back({{"alpha", d.alpha},
                            {"z", d.z},
                            {"got", coeff_to_json(d.got)},
                            {"want", coeff_to_json(d.want)}});
        j["discrepancies"] = disc;
        out << j.dump() << "\n";
    } else if (report.ok) {
        out << "main identity: ok (field=" << field.name() << ", z<=" << opt.trunc_z
            << ", |alpha|<=" << opt.trunc_deg << ")\n";
    } else {
        out << "main identity: FAILED (field=" << field.name() << ")\n";
        for (const auto& d : report.discrepancies) {
            out << "  at alpha=" << render_monomial(Monomial(d.alpha), file.var_names)
                << " z^" << d.z << ": got " << d.got.get_str() << ", want "
                << d.want.get_str() << "\n";
        }
    }
    return report.ok ? 0 : 1;
}

} // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Poincare-series denominators of monomial rings"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* sub, bool with_path, bool with_trunc) {
        sub->add_option("input", opt.input,
                        "ideal file ('-' for stdin)");
        sub->add_option("--field", opt.field, "rational or gf:<p>")
            ->capture_default_str();
        sub->add_option("--cap", opt.cap, "generator count cap")
            ->capture_default_str();
        sub->add_flag("--json", opt.as_json, "JSON output");
        if (with_path)
            sub->add_option("--path", opt.path, "formula|intervals|deviations")
                ->capture_default_str();
        if (with_trunc) {
            sub->add_option("--trunc-z", opt.trunc_z, "z-degree bound")
                ->capture_default_str();
            sub->add_option("--trunc-deg", opt.trunc_deg, "total alpha-degree bound")
                ->capture_default_str();
        }
    };

    add_common(app.add_subcommand("denominator", "denominator polynomial b_R(x,z)"),
               true, false);
    add_common(app.add_subcommand("series", "truncated Poincare series"), false, true);
    add_common(app.add_subcommand("betti", "Betti numerator P^Q_R(x,z)"), false, false);
    add_common(app.add_subcommand("golod", "Golod detection (both routes)"), false,
               false);
    add_common(app.add_subcommand("deviations", "square-free deviation table"), false,
               false);
    add_common(app.add_subcommand("saturated", "saturated subsets (JSON)"), false,
               false);
    add_common(app.add_subcommand("complexes", "faces of the saturated-subset complexes (JSON)"),
               false, false);
    add_common(app.add_subcommand("polarize", "square-free polarization"), false,
               false);
    add_common(app.add_subcommand("verify", "check b_R * P = Koszul against the bar oracle"),
               false, true);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 1;
    }

    try {
        if (app.got_subcommand("denominator")) return cmd_denominator(opt, out);
        if (app.got_subcommand("series")) return cmd_series(opt, out);
        if (app.got_subcommand("betti")) return cmd_betti(opt, out);
        if (app.got_subcommand("golod")) return cmd_golod(opt, out);
        if (app.got_subcommand("deviations")) return cmd_deviations(opt, out);
        if (app.got_subcommand("saturated")) return cmd_saturated(opt, out);
        if (app.got_subcommand("complexes")) return cmd_complexes(opt, out);
        if (app.got_subcommand("polarize")) return cmd_polarize(opt, out);
        if (app.got_subcommand("verify")) return cmd_verify(opt, out);
        err << "error: no subcommand\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace monring::cli
