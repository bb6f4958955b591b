#include "ttl/json_io.hpp"

namespace ttl {

json rot_to_json(const Rot& r) {
    json j = r.str();
    return j;
}

json shape_to_json(const ExtShape& E) {
    return json{
        {"p", E.p}, {"m", E.m}, {"e", E.e}, {"f", E.f}, {"zeta_EF", E.zeta_ef}};
}

ExtShape shape_from_json(const json& j) {
    return make_ext_shape(j.at("p").get<i64>(), j.at("m").get<i64>(), j.at("e").get<i64>(),
                          j.at("f").get<i64>(), j.value("zeta_EF", (i64)0));
}

json jump_datum_to_json(const JumpDatum& jd) {
    json e_chain = json::array(), f_chain = json::array(), jumps = json::array(),
         zetas = json::array();
    for (const auto& L : jd.layers) {
        e_chain.push_back(L.e_i);
        f_chain.push_back(L.f_i);
        jumps.push_back(L.r_i);
        zetas.push_back(L.zeta_i);
    }
    return json{{"schema", 1},        {"shape", shape_to_json(jd.shape)},
                {"e_chain", e_chain}, {"f_chain", f_chain},
                {"jumps", jumps},     {"zetas", zetas}};
}

JumpDatum jump_datum_from_json(const json& j) {
    require(j.value("schema", 0) == 1, "jump datum: unsupported schema");
    JumpDatum jd;
    jd.shape = shape_from_json(j.at("shape"));
    const auto& e_chain = j.at("e_chain");
    const auto& f_chain = j.at("f_chain");
    const auto& jumps = j.at("jumps");
    const auto& zetas = j.at("zetas");
    require(e_chain.size() == f_chain.size() && e_chain.size() == jumps.size() &&
                e_chain.size() == zetas.size(),
            "jump datum: chain arrays must have equal length");
    for (size_t i = 0; i < e_chain.size(); ++i)
        jd.layers.push_back({e_chain[i].get<i64>(), f_chain[i].get<i64>(),
                             jumps[i].get<i64>(), zetas[i].get<i64>()});
    require_valid(jd);
    return jd;
}

json tame_char_to_json(const TameChar& c) {
    json j{{"mu_order", c.mu_order},
           {"mu_mult", c.mu_mult},
           {"varpi_val", rot_to_json(c.varpi_val)}};
    if (c.varpi_val.is_sign()) j["varpi_sign"] = c.varpi_val.as_sign();
    return j;
}

json coset_to_json(const DoubleCoset& dc) {
    return json{{"k", dc.k},
                {"i", dc.i},
                {"kind", kind_name(dc.kind)},
                {"t_min", dc.t_min},
                {"deg", dc.deg}};
}

json chi_datum_to_json(const ChiDatum& x) {
    json j{{"coset", coset_to_json(x.dc)}};
    if (x.dc.kind == Kind::asym) {
        j["mu_Eg_sign"] = x.mu_Eg_sign;
        j["varpi_val"] = "defaulted";
    } else {
        j["mu_gen_val"] = rot_to_json(x.mu_gen_val);
        j["varpi_val"] = rot_to_json(x.varpi_val);
    }
    return j;
}

} // namespace ttl
