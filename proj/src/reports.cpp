#include "arrmorse/reports.hpp"

#include <json.hpp>

namespace arrmorse {

using nlohmann::json;

std::string faces_report(const Arrangement& arr) {
    FacePoset poset(arr);
    json j;
    j["dim"] = arr.dim;
    j["faces"] = poset.size();
    json per = json::array();
    for (int k = 0; k <= arr.dim; ++k) per.push_back(poset.of_codim(k).size());
    j["by_codim"] = per;
    j["chambers"] = poset.chambers().size();
    j["vertices"] = poset.vertices().size();
    json fj = json::array();
    for (int f = 0; f < poset.size(); ++f) {
        json row;
        row["signs"] = signs_str(poset.face(f).signs);
        row["codim"] = poset.face(f).codim;
        row["bounded"] = poset.is_bounded(f);
        fj.push_back(row);
    }
    j["list"] = fj;
    return j.dump(2);
}

std::string lattice_report(const Arrangement& arr) {
    IntersectionLattice lat(arr);
    json j;
    j["dim"] = arr.dim;
    j["rank"] = lat.rank();
    j["flats"] = lat.size();
    j["charpoly"] = lat.charpoly();
    j["betti"] = lat.betti();
    j["chambers"] = lat.chamber_count();
    j["bounded_chambers"] = lat.bounded_chamber_count();
    json fj = json::array();
    for (int i = 0; i < lat.size(); ++i) {
        json row;
        row["dim"] = lat.flat(i).dim;
        row["mobius"] = lat.flat(i).mobius;
        json hyps = json::array();
        for (int h = 0; h < arr.size(); ++h)
            if ((lat.flat(i).hyps >> h) & 1) hyps.push_back(h);
        row["hyperplanes"] = hyps;
        fj.push_back(row);
    }
    j["list"] = fj;
    return j.dump(2);
}

std::string flag_json_report(const Arrangement& arr, const Flag& fl, uint64_t seed) {
    json j = json::parse(fl.to_json());
    j["seed"] = seed;
    FlagReport rep = verify_flag(arr, fl.subspaces);
    j["verified"] = rep.pass;
    json items = json::array();
    for (const auto& it : rep.items) {
        json row;
        row["check"] = it.name;
        row["pass"] = it.pass;
        if (!it.witness.empty()) row["witness"] = it.witness;
        items.push_back(row);
    }
    j["checks"] = items;
    return j.dump(2);
}

namespace {
json ordering_json(const Flag& fl, const Ordering& o) {
    json out = json::array();
    for (int a : o.amb) out.push_back(signs_str(fl.amb.face(a).signs));
    return out;
}
}  // namespace

std::string sweep_report(const Flag& fl, uint64_t seed) {
    Orderings ords = canonical_orderings(fl);
    json j;
    j["seed"] = seed;
    j["levels"] = json::array();
    for (int k = 0; k <= fl.dim(); ++k) {
        json row;
        row["level"] = k;
        row["points"] = ords[k].amb.size();
        row["ordering"] = ordering_json(fl, ords[k]);
        if (k >= 1) {
            Validation v = validate_special_ordering(fl.levels[k], ords[k].verts);
            row["special"] = v.ok;
        }
        j["levels"].push_back(row);
    }
    return j.dump(2);
}

std::string polar_report(const Flag& fl, const Orderings& ords, uint64_t seed,
                         const std::string& format) {
    PolarOrder po = build_polar_order(fl, ords);
    if (format == "tsv") {
        std::string out = "rank\tsigns\tcodim\tk\tj\tkey\n";
        for (int r = 0; r < (int)po.by_rank.size(); ++r) {
            int f = po.by_rank[r];
            FaceSignature sig = signature(fl, ords, f);
            std::string key;
            for (auto [a, b] : po.key[f]) key += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
            out += std::to_string(r) + "\t" + signs_str(fl.amb.face(f).signs) + "\t" +
                   std::to_string(fl.amb.face(f).codim) + "\t" + std::to_string(sig.k) + "\t" +
                   std::to_string(sig.j) + "\t" + key + "\n";
        }
        return out;
    }
    json j;
    j["seed"] = seed;
    json rows = json::array();
    for (int r = 0; r < (int)po.by_rank.size(); ++r) {
        int f = po.by_rank[r];
        FaceSignature sig = signature(fl, ords, f);
        json row;
        row["rank"] = r;
        row["signs"] = signs_str(fl.amb.face(f).signs);
        row["codim"] = fl.amb.face(f).codim;
        row["k"] = sig.k;
        row["j"] = sig.j;
        json key = json::array();
        for (auto [a, b] : po.key[f]) key.push_back(json::array({a, b}));
        row["key"] = key;
        rows.push_back(row);
    }
    j["faces"] = rows;
    return j.dump(2);
}

std::string morse_report(const Flag& fl, const Orderings& ords, uint64_t seed, bool* pass) {
    MinimalityReport rep = minimality_report(fl.arr, fl, ords);
    json j = json::parse(rep.to_json());
    j["seed"] = seed;
    PolarOrder po = build_polar_order(fl, ords);
    SalvettiComplex sc = build_salvetti(fl.amb);
    j["cells"] = sc.dim_count();
    j["euler"] = sc.euler_characteristic();
    Matching m = polar_matching(sc, po, fl);
    MatchingReport mr = verify_matching(sc, m.pairs);
    j["matching"] = mr.is_matching;
    j["acyclic"] = mr.acyclic;
    std::vector<int> t6 = critical_cells_t6(sc, po, fl);
    std::vector<int> crit = m.critical;
    std::sort(crit.begin(), crit.end());
    std::sort(t6.begin(), t6.end());
    j["t6_equal"] = crit == t6;
    if (pass) *pass = rep.pass && mr.pass() && crit == t6;
    return j.dump(2);
}

std::string followup_report(const Arrangement& arr, const Flag* fl, uint64_t seed,
                            int random_budget, bool* result) {
    json j;
    j["seed"] = seed;
    if (arr.dim == 2 && !fl) {
        FollowupDecision dec = decide_followup_2d(arr, seed, random_budget);
        j["followup"] = dec.followup;
        j["central"] = dec.central;
        j["candidates_examined"] = dec.candidates_examined;
        if (dec.witness) {
            json w;
            w["h0"] = dec.witness->h0;
            w["orientation"] = dec.witness->orientation;
            w["side"] = dec.witness->side;
            json base = json::array();
            for (const auto& c : dec.witness->base) base.push_back(c.str());
            w["base"] = base;
            json normal = json::array();
            for (const auto& c : dec.witness->ell.normal) normal.push_back(c.str());
            w["ell_normal"] = normal;
            w["ell_offset"] = dec.witness->ell.offset.str();
            j["witness"] = w;
        }
        if (result) *result = dec.followup;
        return j.dump(2);
    }
    if (!fl) throw InputError("followup in dimension > 2 needs a flag");
    bool fu = is_followup(*fl);
    j["followup"] = fu;
    if (result) *result = fu;
    return j.dump(2);
}

std::string supersolvable_report(const Arrangement& arr, uint64_t seed, bool* pass) {
    json j;
    j["seed"] = seed;
    auto filt = supersolvable_filtration(arr);
    j["supersolvable"] = filt.has_value();
    if (!filt) {
        if (pass) *pass = true;  // a definite negative is a valid outcome
        return j.dump(2);
    }
    json fj = json::array();
    for (const auto& step : *filt) fj.push_back(step);
    j["filtration"] = fj;
    Flag fl = ssfol_flag(arr, *filt, seed);
    j["flag"] = json::parse(fl.to_json());
    Orderings ords = ssfol_order(fl, *filt);
    json levels = json::array();
    for (int k = 0; k <= fl.dim(); ++k) {
        json row;
        row["level"] = k;
        row["ordering"] = ordering_json(fl, ords[k]);
        levels.push_back(row);
    }
    j["orderings"] = levels;
    SegmentatoCheck seg = segmentato_check(fl, *filt, ords);
    j["precedence"] = seg.precedence;
    j["separation"] = seg.separation;
    bool morse_pass = false;
    json mj = json::parse(morse_report(fl, ords, seed, &morse_pass));
    j["minimality"] = mj;
    j["followup"] = is_followup(fl);
    if (pass) *pass = seg.precedence && seg.separation && morse_pass;
    return j.dump(2);
}

}  // namespace arrmorse
