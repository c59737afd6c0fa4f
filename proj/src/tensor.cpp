#include "vedit/tensor.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace vedit {

Tensor::Tensor(std::vector<uint32_t> d, float fill) : dims(std::move(d)) {
    size_t n = 1;
    for (uint32_t v : dims) n *= v;
    data.assign(n, fill);
}

size_t Tensor::numel() const {
    size_t n = 1;
    for (uint32_t v : dims) n *= v;
    return n;
}

bool Tensor::all_finite() const {
    for (float v : data)
        if (!std::isfinite(v)) return false;
    return true;
}

Tensor zeros_like(const Tensor& t) { return Tensor(t.dims, 0.0f); }

void require_shape_match(const Tensor& a, const Tensor& b, const char* what) {
    if (!a.same_shape(b)) throw std::invalid_argument(std::string(what) + ": shape mismatch");
}

void axpy(float a, const Tensor& x, Tensor& y) {
    require_shape_match(x, y, "axpy");
    for (size_t i = 0; i < y.data.size(); ++i) y.data[i] += a * x.data[i];
}

void scale(Tensor& t, float a) {
    for (float& v : t.data) v *= a;
}

Tensor add(const Tensor& a, const Tensor& b) {
    require_shape_match(a, b, "add");
    Tensor r = a;
    for (size_t i = 0; i < r.data.size(); ++i) r.data[i] += b.data[i];
    return r;
}

Tensor sub(const Tensor& a, const Tensor& b) {
    require_shape_match(a, b, "sub");
    Tensor r = a;
    for (size_t i = 0; i < r.data.size(); ++i) r.data[i] -= b.data[i];
    return r;
}

double mse(const Tensor& a, const Tensor& b) {
    require_shape_match(a, b, "mse");
    double acc = 0.0;
    for (size_t i = 0; i < a.data.size(); ++i) {
        double d = double(a.data[i]) - double(b.data[i]);
        acc += d * d;
    }
    return a.data.empty() ? 0.0 : acc / double(a.data.size());
}

double mean_abs_diff(const Tensor& a, const Tensor& b) {
    require_shape_match(a, b, "mean_abs_diff");
    double acc = 0.0;
    for (size_t i = 0; i < a.data.size(); ++i)
        acc += std::abs(double(a.data[i]) - double(b.data[i]));
    return a.data.empty() ? 0.0 : acc / double(a.data.size());
}

double max_abs_diff(const Tensor& a, const Tensor& b) {
    require_shape_match(a, b, "max_abs_diff");
    double m = 0.0;
    for (size_t i = 0; i < a.data.size(); ++i)
        m = std::max(m, std::abs(double(a.data[i]) - double(b.data[i])));
    return m;
}

uint32_t clip_frames(const Tensor& clip) {
    if (clip.rank() != 4) throw std::invalid_argument("clip_frames: expected rank-4 clip");
    return clip.dims[0];
}

Tensor clip_frame(const Tensor& clip, uint32_t t) {
    if (clip.rank() != 4) throw std::invalid_argument("clip_frame: expected rank-4 clip");
    if (t >= clip.dims[0]) throw std::out_of_range("clip_frame: frame index out of range");
    Tensor f({clip.dims[1], clip.dims[2], clip.dims[3]});
    size_t stride = f.numel();
    std::copy(clip.data.begin() + t * stride, clip.data.begin() + (t + 1) * stride, f.data.begin());
    return f;
}

void set_clip_frame(Tensor& clip, uint32_t t, const Tensor& frame) {
    if (clip.rank() != 4) throw std::invalid_argument("set_clip_frame: expected rank-4 clip");
    if (t >= clip.dims[0]) throw std::out_of_range("set_clip_frame: frame index out of range");
    size_t stride = frame.numel();
    if (stride != size_t(clip.dims[1]) * clip.dims[2] * clip.dims[3])
        throw std::invalid_argument("set_clip_frame: frame shape mismatch");
    std::copy(frame.data.begin(), frame.data.end(), clip.data.begin() + t * stride);
}

Tensor warp_backward(const Tensor& src, const Tensor& flow, Tensor* oob_mask) {
    if (src.rank() != 3 || flow.rank() != 3)
        throw std::invalid_argument("warp_backward: expected rank-3 frame and flow");
    uint32_t h = src.dims[0], w = src.dims[1], c = src.dims[2];
    if (flow.dims[0] != h || flow.dims[1] != w || flow.dims[2] < 2)
        throw std::invalid_argument("warp_backward: flow shape mismatch");
    uint32_t fc = flow.dims[2];
    Tensor out({h, w, c}, 0.0f);
    if (oob_mask) *oob_mask = Tensor({h, w}, 0.0f);
    for (uint32_t y = 0; y < h; ++y) {
        for (uint32_t x = 0; x < w; ++x) {
            size_t fi = (size_t(y) * w + x) * fc;
            float sx = float(x) - flow.data[fi + 0];
            float sy = float(y) - flow.data[fi + 1];
            if (sx < 0.0f || sy < 0.0f || sx > float(w - 1) || sy > float(h - 1)) continue;
            int x0 = int(std::floor(sx)), y0 = int(std::floor(sy));
            int x1 = std::min<int>(x0 + 1, w - 1), y1 = std::min<int>(y0 + 1, h - 1);
            float ax = sx - float(x0), ay = sy - float(y0);
            const float* p = src.ptr();
            size_t o = (size_t(y) * w + x) * c;
            for (uint32_t k = 0; k < c; ++k) {
                float v00 = p[(size_t(y0) * w + x0) * c + k];
                float v01 = p[(size_t(y0) * w + x1) * c + k];
                float v10 = p[(size_t(y1) * w + x0) * c + k];
                float v11 = p[(size_t(y1) * w + x1) * c + k];
                out.data[o + k] = (1 - ay) * ((1 - ax) * v00 + ax * v01) + ay * ((1 - ax) * v10 + ax * v11);
            }
            if (oob_mask) oob_mask->data[size_t(y) * w + x] = 1.0f;
        }
    }
    return out;
}

}  // namespace vedit
