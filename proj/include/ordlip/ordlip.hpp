#pragma once

// Umbrella header: the whole library is header-only.

#include "ordlip/context.hpp"
#include "ordlip/extension.hpp"
#include "ordlip/generators.hpp"
#include "ordlip/json_io.hpp"
#include "ordlip/poset.hpp"
#include "ordlip/radiality.hpp"
#include "ordlip/representation.hpp"
#include "ordlip/uc_extension.hpp"
