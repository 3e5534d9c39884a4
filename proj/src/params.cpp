#include "airgnn/params.hpp"

#include <cmath>
#include <stdexcept>

namespace airgnn::diffcore {

void ParameterStore::add(const std::string& name, Array value) {
  if (slots_.count(name)) throw std::invalid_argument("param '" + name + "' already exists");
  Slot slot;
  slot.grad = Array(value.shape);
  slot.m = Array(value.shape);
  slot.v = Array(value.shape);
  slot.value = std::move(value);
  slots_.emplace(name, std::move(slot));
}

const Array& ParameterStore::value(const std::string& name) const {
  auto it = slots_.find(name);
  if (it == slots_.end()) throw std::invalid_argument("unknown param '" + name + "'");
  return it->second.value;
}

Array& ParameterStore::mutable_value(const std::string& name) {
  auto it = slots_.find(name);
  if (it == slots_.end()) throw std::invalid_argument("unknown param '" + name + "'");
  return it->second.value;
}

const Array& ParameterStore::grad(const std::string& name) const {
  auto it = slots_.find(name);
  if (it == slots_.end()) throw std::invalid_argument("unknown param '" + name + "'");
  return it->second.grad;
}

void ParameterStore::zero_grads() {
  for (auto& [name, slot] : slots_) {
    for (auto& g : slot.grad.data) g = 0.0;
  }
}

void ParameterStore::add_gradients(const GradientBuffer& buffer, double scale) {
  for (const auto& [name, g] : buffer) {
    auto it = slots_.find(name);
    if (it == slots_.end()) throw std::invalid_argument("gradient for unknown param '" + name + "'");
    Array& acc = it->second.grad;
    if (!acc.same_shape(g)) throw std::invalid_argument("gradient shape mismatch for '" + name + "'");
    for (size_t i = 0; i < g.numel(); ++i) acc.data[i] += scale * g.data[i];
  }
}

std::vector<std::string> ParameterStore::names() const {
  std::vector<std::string> out;
  out.reserve(slots_.size());
  for (const auto& [name, slot] : slots_) out.push_back(name);
  return out;
}

size_t ParameterStore::parameter_count() const {
  size_t n = 0;
  for (const auto& [name, slot] : slots_) n += slot.value.numel();
  return n;
}

void adam_step(ParameterStore& store, double lr, double beta1, double beta2,
               double eps, const std::vector<std::string>& trainable) {
  store.step_ += 1;
  const double t = static_cast<double>(store.step_);
  const double bc1 = 1.0 - std::pow(beta1, t);
  const double bc2 = 1.0 - std::pow(beta2, t);
  for (auto& [name, slot] : store.slots_) {
    if (!trainable.empty() &&
        std::find(trainable.begin(), trainable.end(), name) == trainable.end()) {
      for (auto& g : slot.grad.data) g = 0.0;
      continue;
    }
    for (size_t i = 0; i < slot.value.numel(); ++i) {
      const double g = slot.grad.data[i];
      if (std::isnan(g)) {
        throw std::runtime_error("adam: NaN gradient in parameter '" + name + "'");
      }
      slot.m.data[i] = beta1 * slot.m.data[i] + (1.0 - beta1) * g;
      slot.v.data[i] = beta2 * slot.v.data[i] + (1.0 - beta2) * g * g;
      const double mhat = slot.m.data[i] / bc1;
      const double vhat = slot.v.data[i] / bc2;
      slot.value.data[i] -= lr * mhat / (std::sqrt(vhat) + eps);
      slot.grad.data[i] = 0.0;
    }
  }
}

}  // namespace airgnn::diffcore
