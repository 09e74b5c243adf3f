[closedset]
label = geo2_Jc50
source = Jc50
targets = Jc58
basis = e1 e2 f1 f2
condition: c[1,2,1] = 0
condition: c[1,3,3] = 0
