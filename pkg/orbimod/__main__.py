from orbimod.app import main

main()
