from skewcert.cli import main

main()
