#pragma once

#include "gmapkit/embedding.hpp"
#include "gmapkit/error.hpp"
#include "gmapkit/gmap.hpp"
#include "gmapkit/graph.hpp"
#include "gmapkit/io/gmap_format.hpp"
#include "gmapkit/io/mesh_format.hpp"
#include "gmapkit/io/rule_format.hpp"
#include "gmapkit/match.hpp"
#include "gmapkit/mesh.hpp"
#include "gmapkit/orbit_type.hpp"
#include "gmapkit/relabel.hpp"
#include "gmapkit/rewrite.hpp"
#include "gmapkit/scheme.hpp"
