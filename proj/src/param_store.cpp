#include "gendist/param_store.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace gendist {

Param& ParamStore::create(const std::string& name, std::vector<std::size_t> shape) {
  if (params_.count(name) != 0) {
    throw std::runtime_error("param \"" + name + "\" already exists");
  }
  Param p;
  p.value = Tensor(shape);
  p.grad = Tensor(shape);
  p.adam_m = Tensor(shape);
  p.adam_v = Tensor(std::move(shape));
  return params_.emplace(name, std::move(p)).first->second;
}

Param& ParamStore::at(const std::string& name) {
  const auto it = params_.find(name);
  if (it == params_.end()) throw std::runtime_error("unknown param \"" + name + "\"");
  return it->second;
}

const Param& ParamStore::at(const std::string& name) const {
  const auto it = params_.find(name);
  if (it == params_.end()) throw std::runtime_error("unknown param \"" + name + "\"");
  return it->second;
}

std::size_t ParamStore::total_size() const {
  std::size_t n = 0;
  for (const auto& [name, p] : params_) n += p.value.size();
  return n;
}

void ParamStore::zero_grads() {
  for (auto& [name, p] : params_) p.grad.fill(0.0);
}

namespace {

void write_doubles(std::ofstream& out, const Tensor& t) {
  // assumes a little-endian host, which is what this project targets
  out.write(reinterpret_cast<const char*>(t.data.data()),
            static_cast<std::streamsize>(t.data.size() * sizeof(double)));
}

void read_doubles(std::ifstream& in, Tensor& t) {
  in.read(reinterpret_cast<char*>(t.data.data()),
          static_cast<std::streamsize>(t.data.size() * sizeof(double)));
  if (!in) throw std::runtime_error("checkpoint payload truncated");
}

}  // namespace

void ParamStore::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  nlohmann::ordered_json header;
  header["format"] = "gendist-ckpt-v1";
  auto& plist = header["params"];
  plist = nlohmann::ordered_json::array();
  for (const auto& [name, p] : params_) {
    plist.push_back({{"name", name}, {"shape", p.value.shape}, {"step", p.step}});
  }
  out << header.dump() << '\n';
  for (const auto& [name, p] : params_) {
    write_doubles(out, p.value);
    write_doubles(out, p.adam_m);
    write_doubles(out, p.adam_v);
  }
}

ParamStore ParamStore::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open checkpoint: " + path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error(path + ": missing header");
  const auto header = nlohmann::ordered_json::parse(line);
  if (header.at("format").get<std::string>() != "gendist-ckpt-v1") {
    throw std::runtime_error(path + ": unknown checkpoint format");
  }
  ParamStore store;
  for (const auto& entry : header.at("params")) {
    auto& p = store.create(entry.at("name").get<std::string>(),
                           entry.at("shape").get<std::vector<std::size_t>>());
    p.step = entry.at("step").get<std::size_t>();
  }
  for (auto& [name, p] : store.params_) {
    read_doubles(in, p.value);
    read_doubles(in, p.adam_m);
    read_doubles(in, p.adam_v);
  }
  return store;
}

void adam_step(ParamStore& store, const AdamConfig& cfg) {
  for (auto& [name, p] : store.params()) {
    p.step += 1;
    const double bc1 = 1.0 - std::pow(cfg.beta1, static_cast<double>(p.step));
    const double bc2 = 1.0 - std::pow(cfg.beta2, static_cast<double>(p.step));
    for (std::size_t i = 0; i < p.value.size(); ++i) {
      const double g = p.grad(i);
      p.adam_m(i) = cfg.beta1 * p.adam_m(i) + (1.0 - cfg.beta1) * g;
      p.adam_v(i) = cfg.beta2 * p.adam_v(i) + (1.0 - cfg.beta2) * g * g;
      const double m_hat = p.adam_m(i) / bc1;
      const double v_hat = p.adam_v(i) / bc2;
      p.value(i) -= cfg.lr * (m_hat / (std::sqrt(v_hat) + cfg.eps) + cfg.weight_decay * p.value(i));
    }
    p.grad.fill(0.0);
  }
}

}  // namespace gendist
