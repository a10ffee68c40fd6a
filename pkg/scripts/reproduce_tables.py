"""Print the orbit census, collision graphs, monodromy groups and vertex-orbit
counts of the eight even classes next to the stored reference values."""

from cayley_octads import diagrams as dg


def main():
    print("class\tparity\talpha\tbeta\tsize\trepresentative")
    for o in dg.enumerate_orbits():
        lab = o.label
        print(f"O{lab.alpha}{lab.beta}\t{'odd' if lab.parity else 'even'}\t{lab.alpha}\t{lab.beta}\t{o.size}\t{o.representative.bits}")
    print(f"# missing even class: {dg.computed_even_exception()}")
    print()
    print("class\tgamma_edges\tgamma_ok\tgroup\tgroup_ok\tvertex_orbits\torbits_ok")
    total = 0
    for row in dg.TABLE_LAYOUT:
        for key in row:
            d = dg.even_representative(key)
            g = dg.gamma_graph(d)
            mono = dg.monodromy_group(d)
            n = dg.vertex_orbits(d)
            total += n
            print(f"O{key[0]}{key[1]}\t{len(g.edges)}\t{g.is_isomorphic(dg.reference_gamma(key))}\t"
                  f"{mono.name}\t{mono.name == dg.REFERENCE_GROUPS[key]}\t{n}\t{n == dg.REFERENCE_ORBITS[key]}")
    print(f"# vertex orbits in total: {total}")
    print()
    print("adjacency:", ", ".join(f"O{u[0]}{u[1]}-O{v[0]}{v[1]}" for u, v in dg.adjacency_graph().edges))


if __name__ == "__main__":
    main()
