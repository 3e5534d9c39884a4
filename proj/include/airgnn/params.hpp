#pragma once

#include <map>
#include <string>
#include <vector>

#include "airgnn/array.hpp"
#include "airgnn/tape.hpp"

namespace airgnn::diffcore {

// Named collection of trainable arrays with gradients and Adam moments.
class ParameterStore {
 public:
  void add(const std::string& name, Array value);
  bool has(const std::string& name) const { return slots_.count(name) > 0; }

  const Array& value(const std::string& name) const;
  Array& mutable_value(const std::string& name);
  const Array& grad(const std::string& name) const;

  void zero_grads();
  void add_gradients(const GradientBuffer& buffer, double scale = 1.0);

  std::vector<std::string> names() const;
  size_t parameter_count() const;

  int64_t step_count() const { return step_; }
  void set_step_count(int64_t s) { step_ = s; }

  ParameterStore clone() const { return *this; }

 private:
  friend struct AdamOptions;
  friend void adam_step(ParameterStore&, double, double, double, double,
                        const std::vector<std::string>&);

  struct Slot {
    Array value;
    Array grad;
    Array m;
    Array v;
  };
  std::map<std::string, Slot> slots_;
  int64_t step_ = 0;
};

// Bias-corrected Adam over every parameter (or the listed subset). Gradients
// are zeroed afterward. A NaN gradient aborts with the parameter name.
void adam_step(ParameterStore& store, double lr, double beta1 = 0.9,
               double beta2 = 0.999, double eps = 1e-8,
               const std::vector<std::string>& trainable = {});

}  // namespace airgnn::diffcore
