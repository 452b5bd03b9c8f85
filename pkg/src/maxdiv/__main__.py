from maxdiv.cli import main

main()
