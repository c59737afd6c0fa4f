#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace vedit {

// Dense row-major float32 tensor. Video clips are [T+1, H, W, C],
// single frames [H, W, C], flow fields [T, H, W, 3] with channels
// (dx, dy, valid).
struct Tensor {
    std::vector<uint32_t> dims;
    std::vector<float> data;

    Tensor() = default;
    explicit Tensor(std::vector<uint32_t> d, float fill = 0.0f);

    size_t rank() const { return dims.size(); }
    size_t numel() const;
    bool same_shape(const Tensor& o) const { return dims == o.dims; }

    float* ptr() { return data.data(); }
    const float* ptr() const { return data.data(); }

    float& operator[](size_t i) { return data[i]; }
    float operator[](size_t i) const { return data[i]; }

    bool all_finite() const;
};

Tensor zeros_like(const Tensor& t);

// y += a * x
void axpy(float a, const Tensor& x, Tensor& y);
void scale(Tensor& t, float a);
Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);

// Mean of squared element-wise difference, accumulated in double.
double mse(const Tensor& a, const Tensor& b);
// Mean of absolute element-wise difference.
double mean_abs_diff(const Tensor& a, const Tensor& b);
double max_abs_diff(const Tensor& a, const Tensor& b);

// Frame t of a rank-4 clip as a rank-3 copy.
Tensor clip_frame(const Tensor& clip, uint32_t t);
void set_clip_frame(Tensor& clip, uint32_t t, const Tensor& frame);
uint32_t clip_frames(const Tensor& clip);

// Backward-warps `src` ([H,W,C]) by `flow` ([H,W,2] or [H,W,3]): the
// output at pixel (y,x) samples src bilinearly at (x - dx, y - dy).
// Out-of-bounds samples are written as 0 and reported in `oob_mask`
// ([H,W], 1 = in bounds) when non-null.
Tensor warp_backward(const Tensor& src, const Tensor& flow, Tensor* oob_mask = nullptr);

void require_shape_match(const Tensor& a, const Tensor& b, const char* what);

}  // namespace vedit
