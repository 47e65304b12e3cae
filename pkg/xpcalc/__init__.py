# xpcalc Package
