#include "logcoef/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>

namespace logcoef {

namespace {

void dump_value(const nlohmann::json& j, std::string& out, int indent);

void dump_string(const std::string& s, std::string& out) {
    out += '"';
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    out += '"';
}

void dump_double(double v, std::string& out) {
    if (!std::isfinite(v)) {
        out += "null";
        return;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
    // keep a numeric token recognizable as floating point
    if (out.find_first_of(".eE", out.size() - std::strlen(buf)) == std::string::npos)
        out += ".0";
}

void indent_to(std::string& out, int indent) {
    out += '\n';
    out.append(static_cast<size_t>(indent) * 2, ' ');
}

void dump_value(const nlohmann::json& j, std::string& out, int indent) {
    switch (j.type()) {
        case nlohmann::json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ',';
                first = false;
                indent_to(out, indent + 1);
                dump_string(it.key(), out);
                out += ": ";
                dump_value(it.value(), out, indent + 1);
            }
            indent_to(out, indent);
            out += '}';
            return;
        }
        case nlohmann::json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += '[';
            bool first = true;
            for (const auto& el : j) {
                if (!first) out += ',';
                first = false;
                indent_to(out, indent + 1);
                dump_value(el, out, indent + 1);
            }
            indent_to(out, indent);
            out += ']';
            return;
        }
        case nlohmann::json::value_t::string:
            dump_string(j.get<std::string>(), out);
            return;
        case nlohmann::json::value_t::boolean:
            out += j.get<bool>() ? "true" : "false";
            return;
        case nlohmann::json::value_t::number_integer:
            out += std::to_string(j.get<long long>());
            return;
        case nlohmann::json::value_t::number_unsigned:
            out += std::to_string(j.get<unsigned long long>());
            return;
        case nlohmann::json::value_t::number_float:
            dump_double(j.get<double>(), out);
            return;
        default:
            out += "null";
            return;
    }
}

}  // namespace

std::string dump_json(const nlohmann::json& j) {
    std::string out;
    dump_value(j, out, 0);
    out += '\n';
    return out;
}

nlohmann::json to_json(const SearchReport& r) {
    nlohmann::json argmax;
    for (size_t d = 0; d < r.argmax.size(); ++d) argmax[r.axis_names[d]] = r.argmax[d];
    nlohmann::json candidates = nlohmann::json::array();
    for (const auto& cand : r.face_r1) {
        candidates.push_back({{"c", cand.point.c},
                              {"p", cand.point.p},
                              {"value", cand.value},
                              {"p_in_range", cand.p_in_range}});
    }
    nlohmann::json out{{"class", class_name(r.class_id)},
                       {"target", target_name(r.target)},
                       {"max_value", r.max_value},
                       {"argmax", argmax},
                       {"stratum", r.stratum},
                       {"closed_form", r.closed_form},
                       {"abs_gap", r.abs_gap},
                       {"scale", r.scale},
                       {"gamma_bound", r.gamma_bound},
                       {"gamma_closed_form", r.gamma_closed_form}};
    if (r.target == Target::Gamma3) out["face_r1_candidates"] = candidates;
    return out;
}

nlohmann::json to_json(const VerifyReport& r) {
    nlohmann::json violations = nlohmann::json::array();
    for (const auto& v : r.violations) {
        violations.push_back({{"trial", v.trial},
                              {"bound", v.bound},
                              {"achieved", v.achieved},
                              {"limit", v.limit}});
    }
    return nlohmann::json{{"class", class_name(r.class_id)},
                          {"trials", r.trials},
                          {"seed", r.seed},
                          {"worst_gamma1_ratio", r.worst_gamma1_ratio},
                          {"worst_gamma2_ratio", r.worst_gamma2_ratio},
                          {"worst_gamma3_ratio", r.worst_gamma3_ratio},
                          {"worst_roth_partial", r.worst_roth},
                          {"roth_limit", roth_limit()},
                          {"starlike_worst_ratio", r.starlike_worst_ratio},
                          {"gamma3_checked", r.gamma3_checked},
                          {"gamma3_skipped", r.gamma3_skipped},
                          {"violations", violations},
                          {"notes", r.notes}};
}

nlohmann::json to_json(const ExtremalWitness& w) {
    nlohmann::json atoms = nlohmann::json::array();
    for (const auto& a : w.herglotz.atoms())
        atoms.push_back({{"weight", a.weight}, {"re", a.point.real()}, {"im", a.point.imag()}});
    return nlohmann::json{{"class", class_name(w.class_id)},
                          {"target", "gamma" + std::to_string(w.target)},
                          {"claimed", w.claimed_value},
                          {"achieved", w.achieved_value},
                          {"abs_gap", std::abs(w.achieved_value - w.claimed_value)},
                          {"membership_min", w.membership},
                          {"atoms", atoms},
                          {"flags", w.flags}};
}

}  // namespace logcoef
