[closedset]
label = geo1_J9
source = J9
targets = J7 J15 J16
basis = f1 f2 f3 e
condition: c[*,*,1] = 0
condition: c[3,4,3] = c[4,4,4]
