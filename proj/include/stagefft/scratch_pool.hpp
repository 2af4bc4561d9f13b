#pragma once

#include <cstddef>
#include <mutex>
#include <vector>

#include "stagefft/types.hpp"

namespace stagefft {

// Thread-safe free list of equally sized work buffers. A lease hands a buffer
// to exactly one caller and returns it on destruction, so concurrent
// transforms sharing a plan never observe each other's data. When the pool is
// empty a fresh buffer is allocated.
class ScratchPool {
public:
    class Lease {
    public:
        Lease(ScratchPool* pool, SignalBuffer buffer) : pool_(pool), buffer_(std::move(buffer)) {}
        Lease(Lease&& other) noexcept : pool_(other.pool_), buffer_(std::move(other.buffer_)) {
            other.pool_ = nullptr;
        }
        Lease& operator=(Lease&&) = delete;
        Lease(const Lease&) = delete;
        Lease& operator=(const Lease&) = delete;
        ~Lease() {
            if (pool_ != nullptr) {
                pool_->release(std::move(buffer_));
            }
        }

        SignalBuffer& buffer() noexcept { return buffer_; }

    private:
        ScratchPool* pool_;
        SignalBuffer buffer_;
    };

    explicit ScratchPool(std::size_t buffer_length) : buffer_length_(buffer_length) {}

    Lease acquire() {
        {
            std::lock_guard lock(mutex_);
            if (!free_.empty()) {
                SignalBuffer buffer = std::move(free_.back());
                free_.pop_back();
                return Lease(this, std::move(buffer));
            }
        }
        return Lease(this, SignalBuffer(buffer_length_));
    }

    std::size_t idle_count() const {
        std::lock_guard lock(mutex_);
        return free_.size();
    }

private:
    void release(SignalBuffer buffer) {
        if (buffer.size() != buffer_length_) {
            return;
        }
        std::lock_guard lock(mutex_);
        free_.push_back(std::move(buffer));
    }

    std::size_t buffer_length_;
    mutable std::mutex mutex_;
    std::vector<SignalBuffer> free_;
};

}  // namespace stagefft
