#include "toricchar/jobspec.hpp"

#include <cctype>
#include <chrono>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "toricchar/charclass.hpp"

namespace toricchar {

namespace {

using nlohmann::ordered_json;

const char* command_name(JobSpec::Command c) {
    switch (c) {
    case JobSpec::Command::FanInfo: return "fan-info";
    case JobSpec::Command::Chow: return "chow";
    case JobSpec::Command::Segre: return "segre";
    case JobSpec::Command::Csm: return "csm";
    case JobSpec::Command::CsmCI: return "csm-ci";
    case JobSpec::Command::Euler: return "euler";
    case JobSpec::Command::All: return "all";
    }
    return "?";
}

Fan load_fan(const JobSpec& spec) {
    if (!spec.space.empty() && !spec.fan_file.empty())
        throw ParseError("give either --space or --fan, not both");
    if (!spec.space.empty()) return Fan::from_shorthand(spec.space);
    if (!spec.fan_file.empty()) return Fan::from_json_file(spec.fan_file);
    throw ParseError("no fan given (use --space or --fan)");
}

std::vector<std::string> load_generator_text(const JobSpec& spec) {
    std::vector<std::string> out = spec.generators;
    if (!spec.ideal_file.empty()) {
        std::ifstream in(spec.ideal_file);
        if (!in) throw ParseError("cannot open ideal file " + spec.ideal_file);
        std::string line;
        while (std::getline(in, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            bool blank = true;
            for (char c : line)
                if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
            if (!blank) out.push_back(line);
        }
    }
    return out;
}

ordered_json class_json(const ChowRing& chow, const ChowClass& c) {
    ordered_json by_codim = ordered_json::object();
    for (int d = 0; d <= chow.dim(); ++d) {
        ordered_json terms = ordered_json::array();
        for (const auto& t : c.graded_part(d).terms()) {
            ordered_json e = ordered_json::array();
            for (auto v : t.e) e.push_back(static_cast<int>(v));
            terms.push_back(ordered_json::array({t.c, e}));
        }
        if (!terms.empty()) by_codim[std::to_string(d)] = terms;
    }
    ordered_json j;
    j["text"] = chow.render(c);
    j["by_codim"] = by_codim;
    return j;
}

ChowClass class_from_json(const ChowRing& chow, const ordered_json& j) {
    ChowClass acc = chow.zero();
    for (const auto& [codim, terms] : j.at("by_codim").items()) {
        (void)codim;
        for (const auto& t : terms) {
            long long c = t.at(0).get<long long>();
            std::vector<Exp> e;
            for (const auto& v : t.at(1)) e.push_back(static_cast<Exp>(v.get<int>()));
            acc = acc + chow.monomial_class(e, c);
        }
    }
    return acc;
}

ordered_json fan_json(const ToricContext& ctx, const FanValidation& val) {
    const Fan& fan = ctx.fan;
    const ChowRing& chow = *ctx.chow;
    ordered_json j;
    j["dim"] = fan.dim;
    j["rays"] = fan.rays;
    j["max_cones"] = fan.max_cones;
    j["var_names"] = fan.var_names;
    j["smooth"] = val.smooth;
    j["complete"] = val.complete;
    j["simplicial"] = val.simplicial;
    j["primitive_collections"] = primitive_collections(fan);
    j["affine_codim_condition"] = affine_codim_condition(fan);
    ordered_json grading = ordered_json::array();
    for (int i = 0; i < fan.nrays(); ++i) grading.push_back(ctx.ring->degree_of_var(i));
    j["grading"] = grading;
    j["nef_basis"] = chow.nef_vectors();
    j["class_names"] = chow.names();
    ordered_json zeta = ordered_json::array();
    for (auto v : chow.point_exponents()) zeta.push_back(static_cast<int>(v));
    j["point_class_nef_exponents"] = zeta;
    j["point_class"] = chow.render(chow.point_class());
    j["chow_ranks"] = chow.ranks();
    j["orthogonal_bases"] = chow.orthogonal_everywhere();
    return j;
}

void fan_text(std::ostringstream& os, const ToricContext& ctx, const FanValidation& val) {
    const Fan& fan = ctx.fan;
    const ChowRing& chow = *ctx.chow;
    os << "fan: dim " << fan.dim << ", " << fan.nrays() << " rays, "
       << fan.max_cones.size() << " maximal cones\n";
    os << "validation: smooth=" << (val.smooth ? "yes" : "no")
       << " complete=" << (val.complete ? "yes" : "no")
       << " simplicial=" << (val.simplicial ? "yes" : "no") << "\n";
    auto pcs = primitive_collections(fan);
    os << "primitive collections (" << pcs.size() << "):";
    for (const auto& pc : pcs) {
        os << " {";
        for (std::size_t i = 0; i < pc.size(); ++i)
            os << (i ? "," : "") << fan.var_names[pc[i]];
        os << "}";
    }
    os << "\n";
    os << "affine codimension condition: "
       << (affine_codim_condition(fan) ? "holds" : "fails") << "\n";
    os << "grading (Pic rank " << chow.q() << "):\n";
    for (int i = 0; i < fan.nrays(); ++i) {
        os << "  deg(" << fan.var_names[i] << ") = (";
        const DegVec& d = ctx.ring->degree_of_var(i);
        for (int k = 0; k < chow.q(); ++k) os << (k ? "," : "") << d[k];
        os << ")\n";
    }
    os << "nef basis:";
    for (int k = 0; k < chow.q(); ++k) {
        os << " " << chow.names()[k] << "=(";
        for (int r = 0; r < chow.q(); ++r) os << (r ? "," : "") << chow.nef_vectors()[k][r];
        os << ")";
    }
    os << "\n";
    os << "chow ranks:";
    for (int d = 0; d <= chow.dim(); ++d) os << " " << chow.rank(d);
    os << " (sum " << chow.ncones() << ")\n";
    os << "point class: " << chow.render(chow.point_class()) << "\n";
}

void run_check(const ToricContext& ctx, std::ostringstream& os, SeededRng& rng) {
    const ChowRing& chow = *ctx.chow;
    int total = 0;
    for (int d = 0; d <= chow.dim(); ++d) total += chow.rank(d);
    os << "check rank-sum: " << total << " == " << chow.ncones() << " : "
       << (total == chow.ncones() ? "ok" : "FAIL") << "\n";
    bool ortho = chow.orthogonal_everywhere();
    os << "check complementary pairing: "
       << (ortho ? "orthogonal" : "non-orthogonal (exact pairing solve in use)") << "\n";
    os << "check dehomogenizing ideal size: ";
    if (affine_codim_condition(ctx.fan)) {
        SeededRng r = rng.derive(0xCE);
        Ideal L = dehomogenizing_ideal(ctx.fan, ctx.ring, r);
        bool ok = static_cast<int>(L.generators.size()) == ctx.fan.nrays() - ctx.fan.dim;
        os << (ok ? "ok" : "FAIL") << "\n";
    } else {
        os << "skipped (condition fails)\n";
    }
    // closed-form cross-check on a random nef hypersurface
    {
        SeededRng r = rng.derive(0xCF);
        DegVec beta(chow.q(), 0);
        for (int k = 0; k < chow.q(); ++k)
            for (int j = 0; j < chow.q(); ++j) beta[j] += chow.nef_vectors()[k][j];
        Polynomial f = random_form(beta, ctx.ring, r);
        Subscheme V = prepare_generators(ctx, {f});
        ChowClass s = segre_class(V, r);
        ChowClass W = chow.class_from_pic(beta);
        ChowClass expect = W * chow.invert_unit(chow.one() + W);
        os << "check hypersurface closed form: " << (s == expect ? "ok" : "FAIL") << "\n";
    }
}

ordered_json degree_table_json(const ChowRing& chow, const DegreeTable& table) {
    ordered_json j = ordered_json::object();
    for (std::size_t iota = 0; iota < table.Y.size(); ++iota) {
        ordered_json row;
        row["class"] = chow.render(table.Y[iota]);
        if (iota < table.gammas.size() && !table.gammas[iota].empty()) {
            ordered_json cells = ordered_json::array();
            const auto& om = chow.omega(static_cast<int>(iota));
            for (std::size_t i = 0; i < table.gammas[iota].size(); ++i) {
                ordered_json cell;
                cell["omega"] = chow.render(chow.omega_class(static_cast<int>(iota),
                                                             static_cast<int>(i)));
                cell["gamma"] = table.gammas[iota][i];
                cell["count"] = table.counts[iota][i];
                cells.push_back(cell);
            }
            (void)om;
            row["cells"] = cells;
        }
        j[std::to_string(iota)] = row;
    }
    return j;
}

} // namespace

JobResult run(const JobSpec& spec) {
    JobResult res;
    std::ostringstream text;
    ordered_json out;
    auto t0 = std::chrono::steady_clock::now();
    try {
        std::uint64_t seed = spec.seed;
        if (!spec.seed_set) {
            std::random_device rd;
            seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
        }
        int workers = spec.workers > 0
                          ? spec.workers
                          : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

        Fan fan = load_fan(spec);
        FanValidation val = validate(fan);
        out["command"] = command_name(spec.command);
        out["seed"] = seed;
        out["prime"] = spec.prime;
        text << "command: " << command_name(spec.command) << "\n";
        text << "seed: " << seed << "   prime: " << spec.prime << "\n";

        if (spec.command == JobSpec::Command::FanInfo && !val.ok()) {
            // fan-info reports on invalid fans instead of failing
            out["fan"] = {{"dim", fan.dim},
                          {"rays", fan.rays},
                          {"max_cones", fan.max_cones},
                          {"smooth", val.smooth},
                          {"complete", val.complete},
                          {"simplicial", val.simplicial},
                          {"notes", val.notes}};
            text << "fan is not smooth+complete:";
            for (const auto& s : val.notes) text << "\n  " << s;
            text << "\n";
            res.text = text.str();
            res.json = out.dump(2) + "\n";
            return res;
        }

        ToricContext ctx = ToricContext::create(fan, PrimeField(spec.prime), workers);
        SeededRng rng(seed);
        out["fan"] = fan_json(ctx, val);
        fan_text(text, ctx, val);

        if (spec.check) run_check(ctx, text, rng);

        if (spec.command != JobSpec::Command::FanInfo &&
            spec.command != JobSpec::Command::Chow) {
            std::vector<std::string> gtext = load_generator_text(spec);
            std::vector<Polynomial> gens;
            for (const auto& s : gtext) gens.push_back(parse_polynomial(s, ctx.ring));
            const ChowRing& chow = *ctx.chow;

            if (spec.saturate_input && !gens.empty()) {
                Ideal sat = saturate_by_ideal(Ideal(ctx.ring, gens),
                                              irrelevant_ideal(ctx.fan, ctx.ring));
                gens = sat.generators;
                text << "input ideal B-saturated: " << gens.size() << " generators\n";
            }

            Subscheme V = prepare_generators(ctx, gens);
            if (!V.raw.empty()) {
                ordered_json alpha = ordered_json::array();
                for (auto v : V.alpha) alpha.push_back(v);
                out["alpha"] = alpha;
                out["generators"] = static_cast<int>(V.raw.size());
                out["prepared_generators"] = static_cast<int>(V.prepared.size());
                text << "generators: " << V.raw.size() << " (prepared to " << V.prepared.size()
                     << " of common degree (";
                for (std::size_t k = 0; k < V.alpha.size(); ++k)
                    text << (k ? "," : "") << V.alpha[k];
                text << "))\n";
            }

            bool want_segre = spec.command == JobSpec::Command::Segre ||
                              spec.command == JobSpec::Command::All;
            bool want_csm = spec.command == JobSpec::Command::Csm ||
                            spec.command == JobSpec::Command::All;
            bool want_csmci = spec.command == JobSpec::Command::CsmCI;
            bool want_euler = spec.command == JobSpec::Command::Euler ||
                              spec.command == JobSpec::Command::All;

            if (want_segre) {
                if (V.raw.empty()) throw Error("segre: empty generator set");
                SeededRng r = rng.derive(0x01);
                DegreeTable table = projective_degrees(V, r);
                ChowClass A = chow.class_from_pic(V.alpha);
                ChowClass inv = chow.invert_unit(chow.one() + A);
                ChowClass acc = inv, sum = chow.zero();
                for (std::size_t iota = 0; iota < table.Y.size(); ++iota) {
                    if (!table.Y[iota].is_zero()) sum = sum + table.Y[iota] * acc;
                    acc = acc * inv;
                }
                ChowClass s = chow.one() - sum;
                out["degree_table"] = degree_table_json(chow, table);
                out["G"] = chow.render(table.G());
                out["segre"] = class_json(chow, s);
                out["chern_fulton"] = class_json(chow, chow.chern_tangent() * s);
                text << "projective degrees G = " << chow.render(table.G()) << "\n";
                text << "segre class:\n  " << chow.render(s) << "\n";
                text << "chern-fulton class:\n  " << chow.render(chow.chern_tangent() * s) << "\n";
            }
            if (want_csm || want_euler) {
                SeededRng r = rng.derive(0x02);
                ChowClass c = csm(V, r, 1u << 10, [&](const std::string& w) {
                    text << "warning: " << w << "\n";
                });
                if (want_csm) {
                    out["csm"] = class_json(chow, c);
                    text << "csm class:\n  " << chow.render(c) << "\n";
                }
                long long chi = chow.degree(c);
                if (V.raw.empty()) chi = chow.ncones();
                out["euler"] = chi;
                text << "euler characteristic: " << chi << "\n";
            }
            if (want_csmci) {
                if (V.raw.empty()) throw Error("csm-ci: empty generator set");
                SeededRng r = rng.derive(0x03);
                ChowClass c = csm_complete_intersection(V, r, spec.verify_front);
                out["csm"] = class_json(chow, c);
                out["euler"] = chow.degree(c);
                text << "csm class (complete intersection):\n  " << chow.render(c) << "\n";
                text << "euler characteristic: " << chow.degree(c) << "\n";
            }
        }

        auto t1 = std::chrono::steady_clock::now();
        long long ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        out["wall_time_ms"] = ms;
        text << "wall time: " << ms << " ms\n";
        res.text = text.str();
        res.json = out.dump(2) + "\n";
        return res;
    } catch (const ParseError& e) {
        res.exit_code = 2;
        res.text = std::string("error: ") + e.what() + "\n";
    } catch (const FanValidationError& e) {
        res.exit_code = 3;
        res.text = std::string("error: ") + e.what() + "\n";
    } catch (const ConditionFailedError& e) {
        res.exit_code = 4;
        res.text = std::string("error: ") + e.what() + "\n";
    } catch (const DegreeNotNefError& e) {
        res.exit_code = 5;
        res.text = std::string("error: ") + e.what() + "\n";
    } catch (const NefBasisNotFoundError& e) {
        res.exit_code = 5;
        res.text = std::string("error: ") + e.what() + "\n";
    } catch (const NotZeroDimensionalError& e) {
        res.exit_code = 6;
        res.text = std::string("error: ") + e.what() + "\n";
    } catch (const std::exception& e) {
        res.exit_code = 1;
        res.text = std::string("error: ") + e.what() + "\n";
    }
    res.json = std::string("{\"error\": ") + ordered_json(res.text).dump() + "}\n";
    return res;
}

// exposed for the round-trip test
ChowClass chow_class_from_json_text(const ChowRing& chow, const std::string& text) {
    return class_from_json(chow, ordered_json::parse(text));
}

} // namespace toricchar
