#include "hvml_cli/generate.hpp"
#include "hvml/duality.hpp"
#include "hvml/vietoris.hpp"

#include <benchmark/benchmark.h>

using namespace hvml;

namespace
{

MVAlgebra frame_algebra( std::size_t lattice_size, std::size_t points )
{
    cli::Rng rng( 1 );
    return box_from_frame( chain( lattice_size ), cli::random_frame( rng, points ) );
}

void homs_powerset( benchmark::State& state )
{
    const auto a = frame_algebra( static_cast< std::size_t >( state.range( 0 ) ),
                                  static_cast< std::size_t >( state.range( 1 ) ) );
    for ( auto _ : state )
        benchmark::DoNotOptimize( enumerate_homs( a ) );
    state.counters[ "carrier" ] = static_cast< double >( a.size() );
}
BENCHMARK( homs_powerset )->Args( { 2, 3 } )->Args( { 3, 3 } )->Args( { 4, 3 } )->Args( { 3, 4 } );

void subalgebras( benchmark::State& state )
{
    const auto l = chain( static_cast< std::size_t >( state.range( 0 ) ) );
    for ( auto _ : state )
        benchmark::DoNotOptimize( enumerate_subalgebras( l ) );
}
BENCHMARK( subalgebras )->DenseRange( 2, 8, 2 );

void dual_space_of_powerset( benchmark::State& state )
{
    const auto a = frame_algebra( 3, static_cast< std::size_t >( state.range( 0 ) ) );
    for ( auto _ : state )
        benchmark::DoNotOptimize( dual_space( a ) );
}
BENCHMARK( dual_space_of_powerset )->DenseRange( 1, 4 );

void dual_algebra_of_object( benchmark::State& state )
{
    cli::Rng rng( 3 );
    const auto o = cli::random_prbs_object( rng, chain( 4 ), static_cast< std::size_t >( state.range( 0 ) ) );
    for ( auto _ : state )
        benchmark::DoNotOptimize( dual_algebra( o ) );
}
BENCHMARK( dual_algebra_of_object )->DenseRange( 1, 4 );

void vietoris_of_random_space( benchmark::State& state )
{
    cli::Rng rng( 7 );
    const auto s = cli::random_boolean_space( rng, static_cast< std::size_t >( state.range( 0 ) ) );
    for ( auto _ : state )
        benchmark::DoNotOptimize( vietoris_space( s ) );
}
BENCHMARK( vietoris_of_random_space )->DenseRange( 1, 5 );

} // namespace

BENCHMARK_MAIN();
