#include "qwalk/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "qwalk/errors.hpp"

namespace qwalk::io {

std::string format_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

void append_row(std::string& out, long n, cplx l, cplx r, double prob,
                const std::string& method)
{
    out += std::to_string(n);
    out += ',';
    out += format_double(l.real());
    out += ',';
    out += format_double(l.imag());
    out += ',';
    out += format_double(r.real());
    out += ',';
    out += format_double(r.imag());
    out += ',';
    out += format_double(prob);
    if (!method.empty()) {
        out += ',';
        out += method;
    }
    out += '\n';
}

} // namespace

std::string walker_csv(const dtqw::WalkerState& s)
{
    std::string out = "n,re_L,im_L,re_R,im_R,prob\n";
    for (size_t i = 0; i < s.amp_l.size(); ++i)
        append_row(out, s.lo + static_cast<long>(i), s.amp_l[i], s.amp_r[i],
                   std::norm(s.amp_l[i]) + std::norm(s.amp_r[i]), "");
    return out;
}

std::string ctqw_csv(const ctqw::CtqwState& s, const std::string& method)
{
    std::string out = "n,re_L,im_L,re_R,im_R,prob,method\n";
    for (size_t i = 0; i < s.amp.size(); ++i)
        append_row(out, s.lo + static_cast<long>(i), s.amp[i], cplx{}, std::norm(s.amp[i]),
                   method);
    return out;
}

std::string distribution_csv(const Distribution& d, const std::string& method)
{
    std::string out = method.empty() ? "n,re_L,im_L,re_R,im_R,prob\n"
                                     : "n,re_L,im_L,re_R,im_R,prob,method\n";
    for (size_t i = 0; i < d.p.size(); ++i)
        append_row(out, d.lo + static_cast<long>(i), cplx{}, cplx{}, d.p[i], method);
    return out;
}

void atomic_write(const std::filesystem::path& path, const std::string& content)
{
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f)
            throw config_error("cannot open " + tmp.string() + " for writing");
        f << content;
        if (!f.good())
            throw config_error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

double csv_total_probability(const std::string& csv)
{
    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line))
        throw config_error("empty CSV");
    long double total = 0.0L;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        size_t pos = 0;
        for (int col = 0; col < 5; ++col) {
            pos = line.find(',', pos);
            if (pos == std::string::npos)
                throw config_error("malformed CSV row: " + line);
            ++pos;
        }
        total += std::strtold(line.c_str() + pos, nullptr);
    }
    return static_cast<double>(total);
}

nlohmann::json law_json(const laws::LimitLaw& law)
{
    using nlohmann::json;
    json j;
    j["law"] = laws::law_name(law);
    if (const auto* k = std::get_if<laws::Konno>(&law)) {
        j["r"] = k->r;
        j["drift"] = k->drift;
    } else if (const auto* a = std::get_if<laws::Arcsine>(&law)) {
        j["radius"] = a->radius;
    } else if (const auto* f = std::get_if<laws::FtdA>(&law)) {
        j["y"] = f->y;
        j["q_l"] = {f->q_l.real(), f->q_l.imag()};
        j["q_r"] = {f->q_r.real(), f->q_r.imag()};
        j["drift"] = f->drift;
    } else if (const auto* n = std::get_if<laws::Normal>(&law)) {
        j["mu"] = n->mu;
        j["nu"] = n->nu;
    } else if (const auto* b = std::get_if<laws::BesselParity>(&law)) {
        j["t_eff"] = b->t_eff;
        j["q_l"] = {b->q_l.real(), b->q_l.imag()};
        j["q_r"] = {b->q_r.real(), b->q_r.imag()};
        j["parity"] = b->parity;
    } else if (const auto* m = std::get_if<laws::ModBessel>(&law)) {
        j["r"] = m->r;
    } else if (const auto* d = std::get_if<laws::Delta>(&law)) {
        j["at"] = d->at;
    }
    return j;
}

nlohmann::json report_json(const stats::ConvergenceReport& rep, const laws::LimitLaw& law)
{
    nlohmann::json j;
    j["scaling"] = rep.scaling;
    j["law"] = law_json(law);
    j["times"] = rep.times;
    j["ks"] = rep.ks;
    nlohmann::json deltas;
    for (size_t m = 0; m < rep.moment_orders.size(); ++m)
        deltas["m" + std::to_string(rep.moment_orders[m])] = rep.moment_deltas[m];
    j["moment_deltas"] = deltas;
    return j;
}

std::string report_csv(const stats::ConvergenceReport& rep)
{
    std::string out = "t,ks,m1,m2,m4\n";
    for (size_t i = 0; i < rep.times.size(); ++i) {
        out += format_double(rep.times[i]);
        out += ',';
        out += format_double(rep.ks[i]);
        for (size_t m = 0; m < rep.moment_orders.size(); ++m) {
            out += ',';
            out += format_double(rep.moment_deltas[m][i]);
        }
        out += '\n';
    }
    return out;
}

nlohmann::json order_report_json(const dirac::OrderReport& rep)
{
    nlohmann::json j;
    j["eps"] = rep.eps;
    j["l2_error"] = rep.l2_error;
    j["fitted_order"] = rep.fitted_order;
    return j;
}

} // namespace qwalk::io
