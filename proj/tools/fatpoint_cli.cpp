#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "fatpoint/catalog.hpp"
#include "fatpoint/configtype.hpp"
#include "fatpoint/conic.hpp"
#include "fatpoint/error.hpp"
#include "fatpoint/geometry.hpp"
#include "fatpoint/hilbert.hpp"
#include "fatpoint/represent.hpp"
#include "fatpoint/tables.hpp"
#include "fatpoint/zariski.hpp"

using namespace fatpoint;
using json = nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { plain, json, csv };

template <class T>
std::string join(const std::vector<T>& v, const char* sep = ",") {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
    return os.str();
}

std::vector<std::int64_t> parse_int_list(const std::string& text, const char* what) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
            throw UsageError(std::string("bad ") + what + " entry '" + item + "'");
        }
    }
    if (out.empty()) throw UsageError(std::string("empty ") + what);
    return out;
}

// "1,2,2" or "2x8"
std::vector<std::int64_t> parse_mults(const std::string& text, std::size_t r) {
    std::vector<std::int64_t> m;
    if (auto x = text.find('x'); x != std::string::npos) {
        auto value = parse_int_list(text.substr(0, x), "multiplicity");
        auto count = parse_int_list(text.substr(x + 1), "multiplicity count");
        if (value.size() != 1 || count.size() != 1 || count[0] < 0) throw UsageError("uniform shorthand is MxN, e.g. 2x8");
        m.assign(static_cast<std::size_t>(count[0]), value[0]);
    } else {
        m = parse_int_list(text, "multiplicity");
    }
    if (r && m.size() != r)
        throw DimensionError("expected " + std::to_string(r) + " multiplicities, got " + std::to_string(m.size()));
    return m;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json betti_json(const BettiTable& t) {
    json a = json::array();
    for (const auto& [deg, count] : t) a.push_back({deg, count});
    return a;
}

json class_json(const DivisorClass& c) {
    json a = json::array({c.degree()});
    for (auto m : c.mults()) a.push_back(m);
    return a;
}

std::string hex(const std::string& bytes) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    for (unsigned char b : bytes) out += {digits[b >> 4], digits[b & 15]};
    return out;
}

struct SchemeArgs {
    std::size_t r = 0;
    std::size_t type = 0;
    std::string notation;
    std::string points;
    std::string mode = "eight_points";
    std::string mults;
};

void add_scheme_options(CLI::App* sub, SchemeArgs& a, bool mults_required) {
    sub->add_option("-r", a.r, "number of points");
    sub->add_option("--type", a.type,
                    "stored type index (conic mode: position in the conic case list, see 'conic --list')");
    sub->add_option("--notation", a.notation, "type in letter notation, e.g. \"1: abc, ade; 2: abcdef\"");
    sub->add_option("--points", a.points, "point file (JSON); the type is identified from coordinates");
    sub->add_option("--mode", a.mode, "eight_points or conic")->check(CLI::IsMember({"eight_points", "conic"}));
    auto* m = sub->add_option("-m,--mults", a.mults, "multiplicities, comma separated or MxN");
    if (mults_required) m->required();
}

struct Scheme {
    ConfigurationType type;
    Mode mode = Mode::eight_points;
    std::vector<std::int64_t> mults;
    std::string label;
};

Scheme resolve(const SchemeArgs& a, bool need_mults) {
    const int given = (a.type ? 1 : 0) + (a.notation.empty() ? 0 : 1) + (a.points.empty() ? 0 : 1);
    if (given != 1) throw UsageError("give exactly one of --type, --notation, --points");
    Scheme s;
    s.mode = parse_mode(a.mode);
    if (!a.points.empty()) {
        if (s.mode != Mode::eight_points) throw UsageError("--points works in eight_points mode");
        auto pts = parse_point_file(read_file(a.points));
        if (a.r && a.r != pts.size()) throw DimensionError("-r does not match the number of points");
        auto id = identify_type(pts);
        s.type = builtin(id.type.r, id.type.index);
        s.label = std::to_string(id.type.index);
        if (need_mults) {
            auto m = parse_mults(a.mults, pts.size());
            s.mults.assign(m.size(), 0);
            for (std::size_t i = 0; i < m.size(); ++i) s.mults[id.permutation[i]] = m[i];
        }
        return s;
    }
    if (!a.r) throw UsageError("-r is required with --type or --notation");
    if (a.type) {
        if (s.mode == Mode::eight_points) {
            s.type = builtin(a.r, a.type);
            s.label = std::to_string(a.type);
        } else {
            auto cases = enumerate_conic_types(a.r);
            if (a.type > cases.size())
                throw LookupError("no conic case " + std::to_string(a.type) + " for r = " + std::to_string(a.r));
            s.type = conic_neg(cases[a.type - 1]);
            s.label = cases[a.type - 1].label();
        }
    } else {
        s.type = parse_notation(a.notation, a.r, s.mode);
        if (s.mode == Mode::eight_points && a.r <= 8)
            if (auto idx = lookup_index(a.r, s.type.canonical_key())) s.label = std::to_string(*idx);
    }
    if (need_mults) s.mults = parse_mults(a.mults, a.r);
    return s;
}

json scheme_json(const Scheme& s) {
    json j;
    j["mode"] = to_string(s.mode);
    j["notation"] = s.type.notation();
    j["r"] = s.type.r();
    if (!s.label.empty()) j["type"] = s.label;
    return j;
}

Format parse_format(const std::string& f, bool json_flag, Format fallback) {
    if (json_flag) return Format::json;
    if (f.empty()) return fallback;
    if (f == "plain") return Format::plain;
    if (f == "json") return Format::json;
    if (f == "csv") return Format::csv;
    throw UsageError("unknown format '" + f + "'");
}

void no_csv(Format f) {
    if (f == Format::csv) throw UsageError("csv output is not available for this command");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fat points in the plane: configuration types, Hilbert functions, Betti numbers"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format;
    bool json_flag = false;
    app.add_option("--format", format, "plain, json or csv (zariski and represent default to json)")->check(CLI::IsMember({"plain", "json", "csv"}));
    app.add_flag("--json", json_flag, "same as --format json");

    // types
    auto* types = app.add_subcommand("types", "stored and enumerated configuration types");
    types->require_subcommand(1);
    std::size_t types_r = 0;
    auto* types_list = types->add_subcommand("list", "list the stored types for r points");
    types_list->add_option("-r", types_r)->required();
    auto* types_enum = types->add_subcommand("enumerate", "enumerate types from scratch and match them to the table");
    bool verify_count = false;
    types_enum->add_option("-r", types_r)->required();
    types_enum->add_flag("--verify-count", verify_count, "print the count and whether it matches the table");
    auto* types_canon = types->add_subcommand("canon", "canonical key and table index of a type");
    std::string canon_notation;
    types_canon->add_option("-r", types_r)->required();
    types_canon->add_option("--notation", canon_notation)->required();

    // catalog
    auto* catalog = app.add_subcommand("catalog", "candidate negative classes");
    catalog->require_subcommand(1);
    auto* catalog_dump = catalog->add_subcommand("dump", "print the candidate family");
    std::size_t catalog_r = 0;
    std::string catalog_mode = "eight_points";
    catalog_dump->add_option("-r", catalog_r)->required();
    catalog_dump->add_option("--mode", catalog_mode)->check(CLI::IsMember({"eight_points", "conic"}));

    SchemeArgs hargs;
    bool with_betti = false;
    auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of a fat point scheme");
    add_scheme_options(hilbert, hargs, true);
    hilbert->add_flag("--betti", with_betti, "include graded Betti numbers");

    SchemeArgs bargs;
    auto* betti = app.add_subcommand("betti", "graded Betti numbers of a fat point scheme");
    add_scheme_options(betti, bargs, true);

    SchemeArgs zargs;
    std::string zclass;
    std::int64_t zdegree = -1;
    bool ztrace = false;
    auto* zariski = app.add_subcommand("zariski", "decompose a class into nef and fixed parts");
    add_scheme_options(zariski, zargs, false);
    zariski->add_option("--class", zclass, "class as d,m1,...,mr");
    zariski->add_option("-d,--degree", zdegree, "use F(Z,d) built from -m");
    zariski->add_flag("--trace", ztrace, "report the potential at each step");

    auto* conic = app.add_subcommand("conic", "points on a conic: cases I-IV");
    std::string ccase;
    std::size_t cr = 0, ca = 0, cb = 0;
    int ceps = 0, cm = 1;
    bool compare_cf = false, clist = false;
    conic->add_option("-r", cr)->required();
    conic->add_option("--case", ccase)->check(CLI::IsMember({"I", "II", "III", "IV"}));
    conic->add_option("--a", ca);
    conic->add_option("--b", cb, "defaults to r + eps - a");
    conic->add_option("--eps", ceps);
    conic->add_option("-m", cm, "uniform multiplicity");
    conic->add_flag("--compare-closed-form", compare_cf, "compare with the closed form (m = 1, 2)");
    conic->add_flag("--list", clist, "list all cases for r");

    std::string ipoints;
    auto* identify = app.add_subcommand("identify", "configuration type of explicit points");
    identify->add_option("--points", ipoints)->required();

    std::string opoints, omults;
    std::int64_t odegree = -1;
    bool obetti = false;
    auto* oracle = app.add_subcommand("oracle", "Hilbert function by direct linear algebra on coordinates");
    oracle->add_option("--points", opoints)->required();
    oracle->add_option("-m,--mults", omults)->required();
    oracle->add_option("-d,--degree", odegree, "only the dimension of forms of this degree");
    oracle->add_flag("--betti", obetti, "also compute generators and syzygies");

    std::size_t rr = 0, rtype = 0;
    bool show_torsion = false;
    auto* represent = app.add_subcommand("represent", "representability verdict of a stored type");
    represent->add_option("-r", rr)->required();
    represent->add_option("--type", rtype)->required();
    represent->add_flag("--show-torsion", show_torsion);

    std::size_t er = 0;
    std::int64_t em = 2;
    std::string eh, emode = "eight_points";
    bool erep = false;
    auto* extremal = app.add_subcommand("extremal", "extreme Hilbert functions of mZ among types with a given h_Z");
    extremal->add_option("-r", er)->required();
    extremal->add_option("-m", em);
    extremal->add_option("--values", eh, "Hilbert function of the reduced scheme, e.g. 1,3,6,8")->required();
    extremal->add_option("--mode", emode)->check(CLI::IsMember({"eight_points", "conic"}));
    extremal->add_flag("--representable-only", erep);

    std::size_t ur = 0, umax = 10;
    bool urep = false;
    auto* uniform = app.add_subcommand("uniform", "partition types by Hilbert functions of uniform schemes");
    uniform->add_option("-r", ur)->required();
    uniform->add_option("-M,--max-mult", umax);
    uniform->add_flag("--representable-only", urep);

    auto* tables = app.add_subcommand("tables", "reference tables");
    tables->require_subcommand(1);
    int table_no = 0;
    auto* reproduce = tables->add_subcommand("reproduce", "regenerate a reference table");
    reproduce->add_option("--table", table_no)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    std::ostream& out = std::cout;
    try {
        const Format fmt = parse_format(format, json_flag, (*zariski || *represent) ? Format::json : Format::plain);
        if (*types) {
            if (*types_list) {
                if (fmt == Format::json) {
                    json a = json::array();
                    for (const auto& t : enumerate(types_r))
                        a.push_back({{"index", t.table_id()->index}, {"notation", t.notation()}});
                    out << a.dump() << '\n';
                } else {
                    if (fmt == Format::csv) out << "index,notation\n";
                    for (const auto& t : enumerate(types_r)) {
                        if (fmt == Format::csv)
                            out << t.table_id()->index << ",\"" << t.notation() << "\"\n";
                        else
                            out << t.table_id()->index << ' ' << t.notation() << '\n';
                    }
                }
            } else if (*types_enum) {
                no_csv(fmt);
                auto check = check_enumeration(types_r);
                if (verify_count) {
                    if (fmt == Format::json)
                        out << json{{"count", check.enumerated}, {"ok", check.ok()}, {"table_rows", check.table_rows}}.dump()
                            << '\n';
                    else
                        out << check.enumerated << (check.ok() ? " OK" : " MISMATCH") << '\n';
                    return check.ok() ? 0 : 1;
                }
                auto raw = enumerate_raw(types_r);
                if (fmt == Format::json) {
                    json a = json::array();
                    for (const auto& t : raw)
                        a.push_back({{"index", *lookup_index(types_r, t.canonical_key())}, {"notation", t.notation()}});
                    out << a.dump() << '\n';
                } else {
                    for (const auto& t : raw) {
                        auto idx = lookup_index(types_r, t.canonical_key());
                        out << (idx ? std::to_string(*idx) : "?") << ' ' << t.notation() << '\n';
                    }
                }
                if (!check.ok()) throw InvariantError("enumeration disagrees with the stored table");
            } else if (*types_canon) {
                no_csv(fmt);
                auto t = parse_notation(canon_notation, types_r);
                auto idx = lookup_index(types_r, t.canonical_key());
                if (fmt == Format::json) {
                    json j{{"key", hex(t.canonical_key())}, {"notation", t.notation()}, {"r", types_r}};
                    j["index"] = idx ? json(*idx) : json(nullptr);
                    out << j.dump() << '\n';
                } else {
                    out << "key " << hex(t.canonical_key()) << "\nindex " << (idx ? std::to_string(*idx) : "none") << '\n';
                }
            }
        } else if (*catalog) {
            no_csv(fmt);
            CandidateFamily fam(catalog_r, parse_mode(catalog_mode));
            if (fmt == Format::json) {
                json a = json::array();
                fam.for_each([&](const DivisorClass& c) {
                    a.push_back(class_json(c));
                    return true;
                });
                out << a.dump() << '\n';
            } else {
                fam.for_each([&](const DivisorClass& c) {
                    out << c.to_string() << '\n';
                    return true;
                });
            }
        } else if (*hilbert || *betti) {
            const bool only_betti = betti->parsed();
            auto s = resolve(only_betti ? bargs : hargs, true);
            HilbertReport rep = (with_betti || only_betti) ? hilbert_with_betti(s.type, s.mults, s.mode)
                                                           : hilbert_function(s.type, s.mults, s.mode);
            if (fmt == Format::json) {
                json j = scheme_json(s);
                j["mults"] = s.mults;
                if (!only_betti) {
                    j["values"] = rep.values;
                    j["delta"] = rep.delta;
                    j["degree"] = rep.degree;
                    j["saturation"] = rep.saturation;
                }
                if (rep.betti_f0) {
                    j["F0"] = betti_json(*rep.betti_f0);
                    j["F1"] = betti_json(*rep.betti_f1);
                }
                out << j.dump() << '\n';
            } else if (fmt == Format::csv) {
                if (only_betti) throw UsageError("csv output is not available for betti");
                out << "t,h,delta\n";
                for (std::size_t t = 0; t < rep.values.size(); ++t)
                    out << t << ',' << rep.values[t] << ',' << rep.values[t] - (t ? rep.values[t - 1] : 0) << '\n';
            } else {
                if (!only_betti) {
                    out << "h: " << join(rep.values) << '\n';
                    out << "delta: " << join(rep.delta) << '\n';
                    out << "degree: " << rep.degree << '\n';
                    out << "saturation: " << rep.saturation << '\n';
                }
                if (rep.betti_f0) {
                    out << "F0: " << format_betti(*rep.betti_f0) << '\n';
                    out << "F1: " << format_betti(*rep.betti_f1) << '\n';
                }
            }
        } else if (*zariski) {
            no_csv(fmt);
            auto s = resolve(zargs, false);
            DivisorClass f;
            if (!zclass.empty() == (zdegree >= 0)) throw UsageError("give exactly one of --class or --degree");
            if (!zclass.empty()) {
                f = parse_class(zclass);
            } else {
                f = fat_point_class(parse_mults(zargs.mults, s.type.r()), zdegree);
            }
            if (f.points() != s.type.r()) throw DimensionError("class and type have different numbers of points");
            ZariskiResult z;
            if (s.type.r() <= 1) {
                z = small_r_rules(f);
            } else {
                DecomposeOptions opts;
                opts.trace = ztrace;
                z = decompose(f, complete(s.type, s.mode), opts);
            }
            if (fmt == Format::json) {
                json j = scheme_json(s);
                j["class"] = class_json(f);
                j["effective"] = z.effective;
                j["h0"] = z.h0;
                j["iterations"] = z.iterations;
                if (z.effective) {
                    j["nef_part"] = class_json(z.nef_part);
                    json fixed = json::array();
                    for (const auto& [c, n] : z.fixed_part) fixed.push_back({{"class", class_json(c)}, {"count", n}});
                    j["fixed_part"] = fixed;
                }
                if (ztrace) j["potentials"] = z.potentials;
                out << j.dump() << '\n';
            } else {
                out << "class: " << f.to_string() << '\n';
                out << "effective: " << (z.effective ? "yes" : "no") << '\n';
                if (z.effective) {
                    out << "nef part: " << z.nef_part.to_string() << '\n';
                    out << "fixed part:";
                    if (z.fixed_part.empty()) out << " none";
                    for (const auto& [c, n] : z.fixed_part) out << ' ' << n << "*(" << c.to_string() << ')';
                    out << '\n';
                }
                out << "h0: " << z.h0 << '\n';
                if (ztrace) out << "potentials: " << join(z.potentials) << '\n';
            }
        } else if (*conic) {
            no_csv(fmt);
            if (clist) {
                auto cases = enumerate_conic_types(cr);
                if (fmt == Format::json) {
                    json a = json::array();
                    for (std::size_t i = 0; i < cases.size(); ++i)
                        a.push_back({{"index", i + 1}, {"label", cases[i].label()}, {"notation", conic_neg(cases[i]).notation()}});
                    out << a.dump() << '\n';
                } else {
                    for (std::size_t i = 0; i < cases.size(); ++i)
                        out << i + 1 << ' ' << cases[i].label() << ' ' << conic_neg(cases[i]).notation() << '\n';
                }
                return 0;
            }
            if (ccase.empty()) throw UsageError("--case is required unless --list is given");
            ConicCase c{parse_conic_kind(ccase), cr, ca, cb, ceps};
            if ((c.kind == ConicCaseKind::III || c.kind == ConicCaseKind::IV) && cb == 0)
                c.b = cr + static_cast<std::size_t>(std::max(ceps, 0)) - ca;
            auto type = conic_neg(c);
            auto rep = hilbert_function(type, std::vector<std::int64_t>(cr, cm), Mode::conic);
            std::optional<std::vector<std::int64_t>> closed;
            if (compare_cf) closed = delta_h_closed_form(c, cm);
            if (fmt == Format::json) {
                json j{{"case", c.label()}, {"delta", rep.delta}, {"m", cm}, {"notation", type.notation()}, {"values", rep.values}};
                if (closed) {
                    j["closed_form"] = *closed;
                    j["match"] = *closed == rep.delta;
                }
                out << j.dump() << '\n';
            } else {
                out << "case: " << c.label() << '\n';
                out << "neg: " << type.notation() << '\n';
                out << "h: " << join(rep.values) << '\n';
                out << "delta: " << join(rep.delta) << '\n';
                if (closed) out << "closed form: " << join(*closed) << (*closed == rep.delta ? " (match)" : " (MISMATCH)") << '\n';
            }
            if (closed && *closed != rep.delta) return 1;
        } else if (*identify) {
            no_csv(fmt);
            auto pts = parse_point_file(read_file(ipoints));
            auto id = identify_type(pts);
            const auto& stored = builtin(id.type.r, id.type.index);
            if (fmt == Format::json) {
                out << json{{"field", pts.field().name()},
                            {"notation", stored.notation()},
                            {"permutation", id.permutation},
                            {"r", id.type.r},
                            {"type", id.type.index}}
                           .dump()
                    << '\n';
            } else {
                out << "r=" << id.type.r << " type " << id.type.index << ": " << stored.notation() << '\n';
                std::vector<std::size_t> one_based;
                for (auto p : id.permutation) one_based.push_back(p + 1);
                out << "point i -> label: " << join(one_based) << '\n';
            }
        } else if (*oracle) {
            auto pts = parse_point_file(read_file(opoints));
            auto m = parse_mults(omults, pts.size());
            if (odegree >= 0) {
                no_csv(fmt);
                const auto dim = linear_system_dim(pts, m, odegree);
                if (fmt == Format::json)
                    out << json{{"degree", odegree}, {"dimension", dim}}.dump() << '\n';
                else
                    out << dim << '\n';
                return 0;
            }
            auto rep = hilbert_oracle(pts, m);
            std::optional<BettiNumbers> b;
            if (obetti) b = betti_oracle(pts, m);
            if (fmt == Format::json) {
                json j{{"degree", rep.degree}, {"delta", rep.delta}, {"field", pts.field().name()}, {"mults", m},
                       {"saturation", rep.saturation}, {"values", rep.values}};
                if (b) {
                    j["F0"] = betti_json(b->f0);
                    j["F1"] = betti_json(b->f1);
                }
                out << j.dump() << '\n';
            } else if (fmt == Format::csv) {
                out << "t,h\n";
                for (std::size_t t = 0; t < rep.values.size(); ++t) out << t << ',' << rep.values[t] << '\n';
            } else {
                out << "h: " << join(rep.values) << '\n';
                out << "degree: " << rep.degree << '\n';
                if (b) out << "F0: " << format_betti(b->f0) << "\nF1: " << format_betti(b->f1) << '\n';
            }
        } else if (*represent) {
            no_csv(fmt);
            auto v = representability(rr, rtype);
            std::optional<FinAbGroup> g;
            if (show_torsion) g = torsion(builtin(rr, rtype));
            if (fmt == Format::json) {
                json j{{"r", rr}, {"source", v.source}, {"type", rtype}, {"verdict", v.to_string()}};
                if (g) {
                    j["invariant_factors"] = g->invariant_factors;
                    j["free_rank"] = g->free_rank;
                }
                out << j.dump() << '\n';
            } else {
                out << "verdict: " << v.to_string() << "\nsource: " << v.source << '\n';
                if (g) out << "torsion: " << g->to_string() << "\nfree rank: " << g->free_rank << '\n';
            }
        } else if (*extremal) {
            no_csv(fmt);
            auto h = parse_int_list(eh, "Hilbert value");
            auto res = extremal_double(h, er, em, parse_mode(emode), erep);
            if (fmt == Format::json) {
                json j{{"matching", res.matching}, {"max_types", res.max_types}, {"min_types", res.min_types}};
                j["h_max"] = res.h_max ? json(*res.h_max) : json(nullptr);
                j["h_min"] = res.h_min ? json(*res.h_min) : json(nullptr);
                out << j.dump() << '\n';
            } else {
                out << "matching types: " << (res.matching.empty() ? "none" : join(res.matching, " ")) << '\n';
                if (res.h_max) out << "max h_mZ: " << join(*res.h_max) << " (types " << join(res.max_types, " ") << ")\n";
                else out << "max h_mZ: none\n";
                if (res.h_min) out << "min h_mZ: " << join(*res.h_min) << " (types " << join(res.min_types, " ") << ")\n";
                else out << "min h_mZ: none\n";
            }
        } else if (*uniform) {
            auto u = uniform_partition(ur, umax, urep);
            if (fmt == Format::json) {
                json groups = json::array();
                for (const auto& g : u.groups) groups.push_back(g);
                out << json{{"bound", u.bound}, {"groups", groups}, {"max_mult", u.max_mult}, {"r", u.r}}.dump() << '\n';
            } else if (fmt == Format::csv) {
                out << "group,types\n";
                for (std::size_t i = 0; i < u.groups.size(); ++i) out << i + 1 << ",\"" << join(u.groups[i], " ") << "\"\n";
            } else {
                out << "groups: " << u.groups.size() << '\n';
                for (const auto& g : u.groups) out << "  " << join(g) << '\n';
                out << "bound: " << u.bound << '\n';
            }
        } else if (*tables) {
            no_csv(fmt);
            out << reproduce_table(table_no);
        }
    } catch (const UsageError& e) {
        const CLI::App* sub = &app;
        while (!sub->get_subcommands().empty()) sub = sub->get_subcommands().front();
        std::cerr << "usage error: " << e.what() << "\n\n" << sub->help();
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
