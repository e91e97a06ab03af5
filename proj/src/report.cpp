#include <json.hpp>

#include "eds/loop.hpp"

namespace eds {

// Versioned JSON schema (version 1):
// {
//   "version": 1,
//   "status": "involutive" | "no-integral-manifolds" | "iteration-cap-reached",
//   "iterations": [{"iteration", "dim_tableau", "characters", "cartan_bound",
//                   "dim_prolongation", "torsion_residuals", "torsion_zero_at_point",
//                   "restricted", "involutive"}...],
//   "generality": {"s_p", "p", "phrase"} | null,
//   "seed": <integer>,
//   "point": {"var": "p/q", ...},
//   "sign_convention": "...",
//   "notes": [...]
// }
// All rationals are "p/q" strings; integers are exact.
std::string report_to_json(const AnalysisReport& rep) {
    nlohmann::ordered_json j;
    j["version"] = 1;
    j["status"] = status_name(rep.status);
    j["iterations"] = nlohmann::ordered_json::array();
    for (const auto& it : rep.iterations) {
        nlohmann::ordered_json r;
        r["iteration"] = it.iteration;
        r["dim_tableau"] = it.dim_tableau;
        r["characters"] = it.characters;
        r["cartan_bound"] = it.cartan_bound;
        r["dim_prolongation"] = it.dim_prolongation;
        r["torsion_residuals"] = it.torsion_residuals;
        r["torsion_zero_at_point"] = it.torsion_zero_at_point;
        r["restricted"] = it.restricted;
        r["involutive"] = it.involutive;
        j["iterations"].push_back(std::move(r));
    }
    if (rep.generality) {
        nlohmann::ordered_json g;
        g["s_p"] = rep.generality->s_p;
        g["p"] = rep.generality->p;
        g["phrase"] = rep.generality->phrase();
        j["generality"] = std::move(g);
    } else {
        j["generality"] = nullptr;
    }
    j["seed"] = rep.seed;
    nlohmann::ordered_json pt = nlohmann::ordered_json::object();
    for (const auto& [v, q] : rep.point_used) {
        std::string name =
            v < rep.scalar_names.size() ? rep.scalar_names[v] : "var" + std::to_string(v);
        pt[name] = to_string(q);
    }
    j["point"] = std::move(pt);
    j["sign_convention"] = "dtheta = +A^a_{ei} pi^e ^ omega^i + T^a_{ij} omega^i ^ omega^j (mod I)";
    j["notes"] = rep.notes;
    return j.dump(2) + "\n";
}

}  // namespace eds
