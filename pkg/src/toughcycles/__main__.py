from toughcycles.cli import main

main()
