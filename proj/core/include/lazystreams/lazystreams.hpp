#ifndef LAZYSTREAMS_LAZYSTREAMS_HPP
#define LAZYSTREAMS_LAZYSTREAMS_HPP

#include "lazystreams/cantor.hpp"
#include "lazystreams/combinators.hpp"
#include "lazystreams/engine.hpp"
#include "lazystreams/generator.hpp"
#include "lazystreams/io.hpp"
#include "lazystreams/lang.hpp"
#include "lazystreams/lazy_list.hpp"
#include "lazystreams/sources.hpp"
#include "lazystreams/value.hpp"

#endif  // LAZYSTREAMS_LAZYSTREAMS_HPP
