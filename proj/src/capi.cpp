#include "rissec/rissec.h"

#include <atomic>
#include <cmath>
#include <cstring>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "config.hpp"
#include "errors.hpp"
#include "montecarlo.hpp"
#include "sop.hpp"

using nlohmann::json;

struct rissec_config {
    rissec::SystemConfig cfg;
};

namespace {

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

void copy_str(char* dst, size_t len, const std::string& s) {
    if (!dst || len == 0) return;
    const size_t n = std::min(len - 1, s.size());
    std::memcpy(dst, s.data(), n);
    dst[n] = '\0';
}

rissec_status run_guarded(const std::function<void()>& fn, std::string* msg = nullptr) {
    try {
        fn();
        return RISSEC_OK;
    } catch (const rissec::mode_error& e) {
        if (msg) *msg = e.what();
        return RISSEC_ERR_MODE;
    } catch (const rissec::capacity_error& e) {
        if (msg) *msg = e.what();
        return RISSEC_ERR_CAPACITY;
    } catch (const rissec::numeric_error& e) {
        if (msg) *msg = e.what();
        return RISSEC_ERR_CONVERGENCE;
    } catch (const std::invalid_argument& e) {
        if (msg) *msg = e.what();
        return RISSEC_ERR_INVALID_ARGUMENT;
    } catch (const std::domain_error& e) {
        if (msg) *msg = e.what();
        return RISSEC_ERR_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        if (msg) *msg = e.what();
        return RISSEC_ERR_INTERNAL;
    }
}

using Setter = std::function<void(rissec::SystemConfig&, double)>;
using Getter = std::function<double(const rissec::SystemConfig&)>;

struct FieldAccess {
    Setter set;
    Getter get;
};

void check_count(double v, const char* key) {
    if (!(v >= 1.0) || v != std::floor(v))
        throw std::invalid_argument(std::string(key) + ": expects a positive integer");
}

const std::map<std::string, FieldAccess>& field_table() {
    static const std::map<std::string, FieldAccess> table = [] {
        std::map<std::string, FieldAccess> t;
        auto count_field = [&](const char* key, unsigned rissec::SystemConfig::* member) {
            t[key] = {[key, member](rissec::SystemConfig& c, double v) {
                          check_count(v, key);
                          c.*member = unsigned(v);
                      },
                      [member](const rissec::SystemConfig& c) { return double(c.*member); }};
        };
        count_field("n_d", &rissec::SystemConfig::n_d);
        count_field("n_e", &rissec::SystemConfig::n_e_elements);
        count_field("l_eves", &rissec::SystemConfig::l_eves);
        count_field("m_interferers", &rissec::SystemConfig::m_interferers);
        auto db_field = [&](const char* key, double rissec::SystemConfig::* member) {
            t[key] = {[member](rissec::SystemConfig& c, double v) { c.*member = db_to_linear(v); },
                      [member](const rissec::SystemConfig& c) { return linear_to_db(c.*member); }};
        };
        db_field("avg_snr_d_db", &rissec::SystemConfig::avg_snr_d);
        db_field("avg_snr_i_db", &rissec::SystemConfig::avg_snr_i);
        db_field("avg_snr_e_db", &rissec::SystemConfig::avg_snr_e);
        db_field("avg_snr_e_ris_db", &rissec::SystemConfig::avg_snr_e_ris);
        auto plain_field = [&](const char* key, double rissec::SystemConfig::* member) {
            t[key] = {[member](rissec::SystemConfig& c, double v) { c.*member = v; },
                      [member](const rissec::SystemConfig& c) { return c.*member; }};
        };
        plain_field("beta_d", &rissec::SystemConfig::beta_d);
        plain_field("beta_e", &rissec::SystemConfig::beta_e);
        t["tau0"] = {[](rissec::SystemConfig& c, double v) { c.target.tau0 = v; },
                     [](const rissec::SystemConfig& c) { return c.target.tau0; }};
        t["trials"] = {[](rissec::SystemConfig& c, double v) {
                           check_count(v, "trials");
                           c.trials = std::uint64_t(v);
                       },
                       [](const rissec::SystemConfig& c) { return double(c.trials); }};
        t["seed"] = {[](rissec::SystemConfig& c, double v) {
                         if (!(v >= 0.0) || v != std::floor(v))
                             throw std::invalid_argument("seed: expects a nonnegative integer");
                         c.seed = std::uint64_t(v);
                     },
                     [](const rissec::SystemConfig& c) { return double(c.seed); }};
        auto hop_fields = [&](const char* prefix, rissec::AlphaMuParams rissec::SystemConfig::* member,
                              bool with_omega) {
            const std::string p(prefix);
            t[p + ".alpha"] = {[member](rissec::SystemConfig& c, double v) { (c.*member).alpha = v; },
                               [member](const rissec::SystemConfig& c) { return (c.*member).alpha; }};
            t[p + ".mu"] = {[member](rissec::SystemConfig& c, double v) { (c.*member).mu = v; },
                            [member](const rissec::SystemConfig& c) { return (c.*member).mu; }};
            if (with_omega)
                t[p + ".omega"] = {[member](rissec::SystemConfig& c, double v) { (c.*member).omega = v; },
                                   [member](const rissec::SystemConfig& c) { return (c.*member).omega; }};
        };
        hop_fields("hop_sr", &rissec::SystemConfig::hop_sr, true);
        hop_fields("hop_rd", &rissec::SystemConfig::hop_rd, true);
        hop_fields("eve_hop_si", &rissec::SystemConfig::eve_hop_si, true);
        hop_fields("eve_hop_ie", &rissec::SystemConfig::eve_hop_ie, true);
        hop_fields("interferer", &rissec::SystemConfig::interferer_fading, false);
        hop_fields("eve_direct", &rissec::SystemConfig::eve_direct_fading, false);
        return t;
    }();
    return table;
}

std::string scenario_str(rissec::EveScenario s) {
    switch (s) {
        case rissec::EveScenario::DirectLink: return "direct";
        case rissec::EveScenario::OwnRis: return "own_ris";
        case rissec::EveScenario::SharedRis: return "shared_ris";
    }
    return "direct";
}

rissec::EveScenario parse_scenario(const std::string& v) {
    if (v == "direct") return rissec::EveScenario::DirectLink;
    if (v == "own_ris") return rissec::EveScenario::OwnRis;
    if (v == "shared_ris") return rissec::EveScenario::SharedRis;
    throw std::invalid_argument("scenario: expected direct|own_ris|shared_ris");
}

std::string case_str(rissec::EveCase c) {
    return c == rissec::EveCase::Colluding ? "colluding" : "non_colluding";
}

rissec::EveCase parse_case(const std::string& v) {
    if (v == "colluding") return rissec::EveCase::Colluding;
    if (v == "non_colluding") return rissec::EveCase::NonColluding;
    throw std::invalid_argument("eve_case: expected colluding|non_colluding");
}

std::string channel_str(rissec::McChannelMode m) {
    return m == rissec::McChannelMode::ModelLaws ? "model" : "exact";
}

rissec::McChannelMode parse_channel(const std::string& v) {
    if (v == "model") return rissec::McChannelMode::ModelLaws;
    if (v == "exact") return rissec::McChannelMode::ExactChannel;
    throw std::invalid_argument("mc_channel: expected model|exact");
}

void set_string_field(rissec::SystemConfig& cfg, const std::string& key,
                      const std::string& value) {
    if (key == "scenario")
        cfg.scenario = parse_scenario(value);
    else if (key == "eve_case")
        cfg.eve_case = parse_case(value);
    else if (key == "mc_channel")
        cfg.mc_channel = parse_channel(value);
    else
        throw std::invalid_argument("unknown string key: " + key);
}

void merge_json(rissec::SystemConfig& cfg, const json& doc) {
    if (!doc.is_object()) throw std::invalid_argument("configuration JSON must be an object");
    const auto& table = field_table();
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        const std::string& key = it.key();
        const json& v = it.value();
        if (v.is_object()) {
            for (auto jt = v.begin(); jt != v.end(); ++jt) {
                const std::string flat = key + "." + jt.key();
                auto f = table.find(flat);
                if (f == table.end())
                    throw std::invalid_argument("unknown configuration key: " + flat);
                f->second.set(cfg, jt.value().get<double>());
            }
            continue;
        }
        if (v.is_string()) {
            set_string_field(cfg, key, v.get<std::string>());
            continue;
        }
        auto f = table.find(key);
        if (f == table.end()) throw std::invalid_argument("unknown configuration key: " + key);
        f->second.set(cfg, v.get<double>());
    }
    cfg.validate();
}

rissec::SopMethod to_method(rissec_method m) {
    switch (m) {
        case RISSEC_METHOD_MONTE_CARLO: return rissec::SopMethod::MonteCarlo;
        case RISSEC_METHOD_QUADRATURE: return rissec::SopMethod::Quadrature;
        case RISSEC_METHOD_CLOSED_FORM: return rissec::SopMethod::ClosedForm;
        case RISSEC_METHOD_ASYMPTOTIC: return rissec::SopMethod::Asymptotic;
    }
    throw std::invalid_argument("unknown method");
}

void fill_estimate(rissec_sop_estimate* out, const rissec::SopEstimate& est) {
    out->value = est.value;
    out->uncertainty = est.uncertainty;
    switch (est.method) {
        case rissec::SopMethod::MonteCarlo: out->method = RISSEC_METHOD_MONTE_CARLO; break;
        case rissec::SopMethod::Quadrature: out->method = RISSEC_METHOD_QUADRATURE; break;
        case rissec::SopMethod::ClosedForm: out->method = RISSEC_METHOD_CLOSED_FORM; break;
        case rissec::SopMethod::Asymptotic: out->method = RISSEC_METHOD_ASYMPTOTIC; break;
    }
    out->status = RISSEC_OK;
    copy_str(out->diagnostics, sizeof(out->diagnostics), est.diagnostics);
}

} // namespace

extern "C" {

const char* rissec_version(void) { return "0.1.0"; }

const char* rissec_status_str(rissec_status s) {
    switch (s) {
        case RISSEC_OK: return "ok";
        case RISSEC_ERR_INVALID_ARGUMENT: return "invalid argument";
        case RISSEC_ERR_MODE: return "closed form unavailable for these parameters";
        case RISSEC_ERR_CONVERGENCE: return "numerical evaluation failed";
        case RISSEC_ERR_CAPACITY: return "expansion exceeds capacity";
        case RISSEC_ERR_PARSE: return "malformed configuration";
        case RISSEC_ERR_INTERNAL: return "internal error";
    }
    return "unknown";
}

rissec_config* rissec_config_create(void) { return new (std::nothrow) rissec_config{}; }

rissec_config* rissec_config_clone(const rissec_config* cfg) {
    if (!cfg) return nullptr;
    return new (std::nothrow) rissec_config{*cfg};
}

void rissec_config_destroy(rissec_config* cfg) { delete cfg; }

rissec_status rissec_config_from_json(rissec_config* cfg, const char* json_text, char* err,
                                      size_t err_len) {
    if (!cfg || !json_text) return RISSEC_ERR_INVALID_ARGUMENT;
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const std::exception& e) {
        copy_str(err, err_len, e.what());
        return RISSEC_ERR_PARSE;
    }
    rissec::SystemConfig next = cfg->cfg;
    std::string msg;
    const rissec_status st = run_guarded([&] { merge_json(next, doc); }, &msg);
    if (st != RISSEC_OK) {
        copy_str(err, err_len, msg);
        return st;
    }
    cfg->cfg = next;
    return RISSEC_OK;
}

rissec_status rissec_config_set(rissec_config* cfg, const char* key, double value) {
    if (!cfg || !key) return RISSEC_ERR_INVALID_ARGUMENT;
    const auto& table = field_table();
    auto it = table.find(key);
    if (it == table.end()) return RISSEC_ERR_INVALID_ARGUMENT;
    rissec::SystemConfig next = cfg->cfg;
    const rissec_status st = run_guarded([&] {
        it->second.set(next, value);
        next.validate();
    });
    if (st == RISSEC_OK) cfg->cfg = next;
    return st;
}

rissec_status rissec_config_get(const rissec_config* cfg, const char* key, double* out) {
    if (!cfg || !key || !out) return RISSEC_ERR_INVALID_ARGUMENT;
    const auto& table = field_table();
    auto it = table.find(key);
    if (it == table.end()) return RISSEC_ERR_INVALID_ARGUMENT;
    *out = it->second.get(cfg->cfg);
    return RISSEC_OK;
}

rissec_status rissec_config_set_string(rissec_config* cfg, const char* key, const char* value) {
    if (!cfg || !key || !value) return RISSEC_ERR_INVALID_ARGUMENT;
    rissec::SystemConfig next = cfg->cfg;
    const rissec_status st = run_guarded([&] {
        set_string_field(next, key, value);
        next.validate();
    });
    if (st == RISSEC_OK) cfg->cfg = next;
    return st;
}

rissec_status rissec_config_get_string(const rissec_config* cfg, const char* key, char* out,
                                       size_t out_len) {
    if (!cfg || !key || !out) return RISSEC_ERR_INVALID_ARGUMENT;
    const std::string k(key);
    if (k == "scenario")
        copy_str(out, out_len, scenario_str(cfg->cfg.scenario));
    else if (k == "eve_case")
        copy_str(out, out_len, case_str(cfg->cfg.eve_case));
    else if (k == "mc_channel")
        copy_str(out, out_len, channel_str(cfg->cfg.mc_channel));
    else
        return RISSEC_ERR_INVALID_ARGUMENT;
    return RISSEC_OK;
}

rissec_status rissec_sop_eval(const rissec_config* cfg, rissec_method method,
                              rissec_sop_estimate* out) {
    if (!cfg || !out) return RISSEC_ERR_INVALID_ARGUMENT;
    std::string msg;
    rissec::SopEstimate est;
    const rissec_status st =
        run_guarded([&] { est = rissec::sop_evaluate(cfg->cfg, to_method(method)); }, &msg);
    if (st != RISSEC_OK) {
        out->value = 0.0;
        out->uncertainty = 0.0;
        out->method = method;
        out->status = st;
        copy_str(out->diagnostics, sizeof(out->diagnostics), msg);
        return st;
    }
    fill_estimate(out, est);
    return RISSEC_OK;
}

rissec_status rissec_sop_eval_many(const rissec_config* cfg, rissec_method method,
                                   const char* axis_key, const double* values, size_t n,
                                   rissec_sop_estimate* out) {
    if (!cfg || !axis_key || !values || !out || n == 0) return RISSEC_ERR_INVALID_ARGUMENT;
    const auto& table = field_table();
    if (table.find(axis_key) == table.end()) return RISSEC_ERR_INVALID_ARGUMENT;

    const unsigned n_threads = std::max(
        1u, std::min({std::thread::hardware_concurrency(), unsigned(n), 8u}));
    std::atomic<size_t> next{0};
    auto work = [&] {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= n) return;
            rissec_config point{cfg->cfg};
            // offset the MC stream per point so sweeps stay reproducible
            point.cfg.seed = cfg->cfg.seed + i;
            rissec_status st = rissec_config_set(&point, axis_key, values[i]);
            if (st == RISSEC_OK) st = rissec_sop_eval(&point, method, &out[i]);
            if (st != RISSEC_OK && out[i].status == RISSEC_OK) {
                out[i].status = st;
                out[i].value = 0.0;
                out[i].uncertainty = 0.0;
                out[i].method = method;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();

    for (size_t i = 0; i < n; ++i)
        if (out[i].status == RISSEC_OK) return RISSEC_OK;
    return out[0].status;
}

} // extern "C"
